import logging
import os
from datetime import date
from pathlib import Path

log_file_name = Path(__file__).parent / "logs" / f"tests-{date.today()}.log"
os.makedirs(log_file_name.parent, exist_ok=True)
logging.basicConfig(
    filename=log_file_name, encoding="utf-8", level=logging.DEBUG
)
