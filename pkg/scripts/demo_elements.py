#!/usr/bin/env python3
"""Walk through the core element API: parsing, products, inverses, idempotents.

Run:  python3 scripts/demo_elements.py
"""

import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from munn import (
    Alphabet,
    identity,
    inverse,
    multiply,
    parse_element,
    plus,
    render_element,
    star,
)


AB = Alphabet(("x", "y"))


def show(label, m):
    text = render_element(m, AB)
    print(f"{label:>14}: {text}   (weight {m.weight}, diameter {m.diameter})")


def main():
    ab = AB
    g = parse_element("({e,x},x)", ab, "FI")
    h = parse_element("({e,y,yx'},yx')", ab, "FI")
    show("g", g)
    show("h", h)
    show("g * h", multiply(g, h))
    show("g^-1", inverse(g))
    show("g * g^-1", multiply(g, inverse(g)))
    show("g+", plus(g))
    show("g*", star(g))
    show("identity", identity("FI"))

    # idempotents commute
    e1 = plus(g)
    e2 = plus(h)
    assert multiply(e1, e2) == multiply(e2, e1)
    print("\nidempotents commute:", render_element(multiply(e1, e2), ab))

    # the positive flavor rejects signed letters
    fla = parse_element("({e,x,xy},xy)", ab, "FLA")
    show("FLA element", fla)


if __name__ == "__main__":
    main()
