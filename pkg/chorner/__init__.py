"""Платформа для точного вычисления многочленов в binary64.

Представляет собой компенсированную схему Горнера, результат которой
так же точен, как схема Горнера в удвоенной рабочей точности.
Вместе с результатом может выдаваться проверенная граница ошибки и
сертификат правильного (faithful) округления.
Всё это проверяется точной рациональной арифметикой.

**Включает в себя**:

- eft: Безошибочные преобразования сложения и умножения.
- polyval: Многочлены, классическая схема Горнера и её EFT.
- compensated: Компенсированная схема Горнера и сертификат.
- oracle: Точная рациональная арифметика, эталон для проверок.
- ddarith: Арифметика double-double, конкурент для сравнения.
- generator: Генератор плохо обусловленных многочленов.
- bench: Замеры времени относительно классической схемы.
- experiments: Воспроизведение экспериментов в CSV.
- storage: Форматы файлов многочленов, корпусов и отчётов.
- view: Представление результатов в различных форматах.
- enums: Общие перечисления и константы проекта.
"""

__version__ = "1.0"
