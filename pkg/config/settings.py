# config/settings.py
import os

GROUP_ORDER_CAP = int(os.getenv("MHC_GROUP_ORDER_CAP", "24"))
ASSOCIATIVITY_CHECK_CAP = int(os.getenv("MHC_ASSOCIATIVITY_CHECK_CAP", "24"))
TABLE_CAP = int(os.getenv("MHC_TABLE_CAP", "100000"))  # bound on |G|^(n+1)

ZLINE_WINDOW = int(os.getenv("MHC_ZLINE_WINDOW", "12"))
XI_TRIALS = int(os.getenv("MHC_XI_TRIALS", "200"))
RANDOM_SEED = int(os.getenv("MHC_RANDOM_SEED", "0"))

LOG_LEVEL = os.getenv("MHC_LOG_LEVEL", "WARNING")
LOG_FORMAT = "%(asctime)s %(name)s %(levelname)s %(message)s"

CACHE_SCHEMA_VERSION = "1.0.0"
CACHE_LOCK_ATTEMPTS = int(os.getenv("MHC_CACHE_LOCK_ATTEMPTS", "5"))
CACHE_LOCK_WAIT_SECONDS = float(os.getenv("MHC_CACHE_LOCK_WAIT_SECONDS", "0.2"))
