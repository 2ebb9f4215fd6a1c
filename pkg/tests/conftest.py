import functools
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from munn.elements import enumerate_elements  # noqa: E402
from munn.words import Alphabet  # noqa: E402

AB2 = Alphabet(("x", "y"))
AB1 = Alphabet(("x",))


@functools.lru_cache(maxsize=None)
def ball_by_diameter(flavor: str, d: int, alphabet=AB2):
    return tuple(enumerate_elements(alphabet, flavor, max_diameter=d))


@functools.lru_cache(maxsize=None)
def ball_by_weight(flavor: str, w: int, alphabet=AB2):
    return tuple(enumerate_elements(alphabet, flavor, max_weight=w))
