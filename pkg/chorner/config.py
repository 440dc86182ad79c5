"""Настройки платформы.

Значения берутся из переменных окружения или файла ``.env``.
Флаги командной строки имеют приоритет над окружением.
"""

from os import getenv
from pathlib import Path

from dotenv import load_dotenv

load_dotenv()

# Используется всеми командами со случайными данными
DEFAULT_SEED = int(getenv("CHORNER_SEED", "1729"))
DATA_DIR = Path(getenv("CHORNER_DATA_DIR", "ch_data"))

LOG_LEVEL = getenv("CHORNER_LOG_LEVEL", "WARNING")
LOG_FILE = getenv("CHORNER_LOG_FILE")

WORKERS = int(getenv("CHORNER_WORKERS", "1"))
