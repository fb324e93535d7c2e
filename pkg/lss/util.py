import json
from fractions import Fraction
from typing import Any, Dict


def json_fraction_default(obj):
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, (set, frozenset)):
        return sorted(obj)
    raise TypeError("Type %s not serializable" % type(obj))


def json_dumps(o: Any) -> str:
    """Deterministic JSON rendering: sorted keys, fixed indentation."""
    return json.dumps(o, indent=2, sort_keys=True, default=json_fraction_default)


def json_load(filename) -> Dict:
    with open(filename, 'r') as fp:
        return json.load(fp)


def subscript(indices) -> str:
    """Render an index tuple the way reports write f_12 or b_23; commas once an index has two digits."""
    return "".join(str(i) for i in indices) if all(i < 10 for i in indices) else ",".join(str(i) for i in indices)
