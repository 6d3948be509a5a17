"""Hamiltonicity tools for cubic bipartite graphs."""
import os
import pathlib

_data = pathlib.Path(__file__).parent / "data"
if _data.is_dir():
    os.environ.setdefault("CUBHAM_DATA_DIR", str(_data))

from ._cubham import *  # noqa: E402,F401,F403
from ._cubham import __doc__  # noqa: E402,F401
