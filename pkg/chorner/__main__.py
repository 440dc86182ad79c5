"""Запуск командной строки как ``python -m chorner``."""

from chorner.cli import main

if __name__ == "__main__":
    main()
