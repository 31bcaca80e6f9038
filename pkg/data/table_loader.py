# data/table_loader.py
import json
import logging
from pathlib import Path

from algebra.errors import ParseError

logger = logging.getLogger(__name__)


def load_table_file(path):
    """Read an external multiplication table.

    Args:
        path (str or Path): JSON file of the form {"order": n, "mul": [[...]], "names": [...]}.

    Returns:
        dict: The validated payload with keys "order", "mul" and "names".
    """
    path = Path(path)
    logger.info("Loading multiplication table from %s", path)
    try:
        with open(path, "r") as f:
            payload = json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        raise ParseError(f"cannot read group table {path}: {e}") from e

    if not isinstance(payload, dict) or "mul" not in payload:
        raise ParseError(f"group table {path} must be an object with a 'mul' field")
    mul = payload["mul"]
    order = payload.get("order", len(mul))
    names = payload.get("names") or [str(i) for i in range(order)]
    if len(mul) != order or any(len(row) != order for row in mul):
        raise ParseError(f"group table {path}: 'mul' must be {order}x{order}")
    if len(names) != order:
        raise ParseError(f"group table {path}: expected {order} names, got {len(names)}")
    if any(not isinstance(x, int) or not 0 <= x < order for row in mul for x in row):
        raise ParseError(f"group table {path}: entries must be element indices below {order}")
    return {"order": order, "mul": mul, "names": [str(n) for n in names]}
