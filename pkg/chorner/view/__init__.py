"""Классы представления результатов.

Позволяет представлять результаты вычислений в различном формате.

- base: Базовый класс представления.
- messages: Представление результатов в виде текстовых сообщений.
"""
