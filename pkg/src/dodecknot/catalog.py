"""Built-in catalog of presentations and named words.

Everything downstream computes from the data in this module: the two
tetrahedral groups

    gamma522333 = < x,y,z   | x^5, y^2, z^2, (z x^-1)^3, (x y^-1)^3, (y z^-1)^3 >
    gamma522623 = < x',y',z'| x'^5, y'^2, z'^2, (y' z'^-1)^6, (z' x'^-1)^2, (x' y'^-1)^3 >

(gamma522333 sits inside gamma522623 at index 2, via x -> x', y -> y',
z -> z' y' z'), the three upper-triangular meridian words at the cusp at
infinity, the ten conjugator words carrying infinity to the other chosen
parabolic fixed points, the unsimplified presentations of the two
dodecahedral knot groups, and the five-element parabolic generating set
a, f, h, o, u of the symmetric dodecahedral knot group written as words
in x, y, z.

The catalog is compiled-in; ``data/catalog.txt`` ships the same words in
the plain text format of :mod:`dodecknot.words` so the entries can be
eyeballed and diffed, and a test pins file and code to each other.
"""

from __future__ import annotations

from functools import cache
from importlib import resources

from .words import Presentation, Word, parse_word_file

# -- tetrahedral groups ------------------------------------------------

_GAMMA_RELATORS = ["x^5", "y^2", "z^2", "z x^-1 z x^-1 z x^-1",
                   "x y^-1 x y^-1 x y^-1", "y z^-1 y z^-1 y z^-1"]

_GAMMA_PRIME_RELATORS = ["x'^5", "y'^2", "z'^2",
                         "y' z'^-1 y' z'^-1 y' z'^-1 y' z'^-1 y' z'^-1 y' z'^-1",
                         "z' x'^-1 z' x'^-1", "x' y'^-1 x' y'^-1 x' y'^-1"]

# -- unsimplified dodecahedral knot group presentations ----------------

_GAMMA_S_GENERATORS = "a b c d e f g h i j k l m n o p q r s t u v w x"
_GAMMA_S_RELATORS = [
    "b v^-1 g^-1 o^-1 w",
    "p b^-1 c^-1",
    "v p v^-1 u^-1 w c^-1",
    "r^-1 q b^-1",
    "k t^-1 r",
    "t f s^-1",
    "a^-1 m t q^-1 k^-1",
    "m s r^-1 k^-1",
    "o m^-1 a w^-1",
    "e a^-1 t",
    "e m^-1 f^-1",
    "e o^-1 a^-1",
    "l u c",
    "j^-1 l^-1 s^-1 t",
    "f l^-1 w^-1 f^-1 u^-1",
    "f j p j^-1",
    "q^-1 g n^-1 x^-1",
    "i^-1 h x^-1 d^-1",
    "h n v^-1 n^-1",
    "i g x",
    "u^-1 o i^-1",
    "d o d^-1 q",
    "d h^-1 o",
]

_GAMMA_F_GENERATORS = "a b c d e f g h i j k l m n o p q r s t u v w"
_GAMMA_F_RELATORS = [
    "a^-1 v a h^-1",
    "n a^-1 w h^-1",
    "o h^-1 d",
    "o^-1 n d^-1",
    "w c h^-1 q^-1",
    "i c^-1 q h w^-1",
    "i v c^-1",
    "l^-1 w^-1 v i",
    "b n^-1 c",
    "g l^-1 d^-1",
    "s g e^-1 i^-1 a",
    "s b l e^-1 l^-1",
    "p r^-1 i^-1 v^-1",
    "p^-1 r e",
    "f r q^-1",
    "j^-1 f g^-1",
    "t^-1 j s^-1 b^-1 k",
    "q^-1 m^-1 j k",
    "t m^-1 p^-1 q e f^-1",
    "t q t^-1 p^-1",
    "u k^-1 h",
    "m u^-1 c^-1 o u",
]

# -- parabolic generating set of the symmetric dodecahedral knot group --

_GAMMA_S_WORDS = {
    "gamma_s.a": "x y^-1 z y^-1",
    "gamma_s.f": "z x y^-1 z y^-1 z",
    "gamma_s.h": "x y^-1 x y x^-1 y^-1 x y^-1 z x y^-1 x^-1 y x^-1",
    "gamma_s.o": "x y^-1 x x y^-1 z y^-1 x^-1 y x^-1",
    "gamma_s.u": "y x y^-1 z x y^-1 z y^-1 z^-1 y^-1 x^-1 y^-1",
}


@cache
def _build() -> dict[str, Presentation | Word]:
    gamma = Presentation.parse("x y z", _GAMMA_RELATORS)
    gamma_prime = Presentation.parse("x' y' z'", _GAMMA_PRIME_RELATORS)
    gamma_s = Presentation.parse(_GAMMA_S_GENERATORS, _GAMMA_S_RELATORS)
    gamma_f = Presentation.parse(_GAMMA_F_GENERATORS, _GAMMA_F_RELATORS)

    m0 = Word.parse("x y^-1 z y^-1")
    m1 = Word.parse("z x^-1 z y^-1")
    m2 = Word.parse("z x^-1 y x^-1")
    y = Word.gen("y")
    x = Word.gen("x")
    # meridian at the fixed point 0, translation direction 0
    m_zero_0 = m0.conjugated_by(y)

    conjugators = {
        "g_p1": y,
        "g_p2": Word.parse("x y x x y x"),
        "g_p3": m2.inverse() * y,
        "g_p4": y * m0 * y,
        "g_p5": m0 * m_zero_0,
        "g_p6": m1.conjugated_by(m2.inverse() * y),
        "g_p7": m2.conjugated_by(y),
        "g_p8": m1 * m_zero_0,
        "g_p9": m1 * y,
        "g_p10": x,
    }

    entries: dict[str, Presentation | Word] = {
        "gamma522333": gamma,
        "gamma53333": gamma,  # alias kept for backwards compatibility
        "gamma522623": gamma_prime,
        "gamma_s_unsimplified": gamma_s,
        "gamma_f_unsimplified": gamma_f,
        "m_inf_0": m0,
        "m_inf_1": m1,
        "m_inf_2": m2,
    }
    entries.update(conjugators)
    entries.update({name: Word.parse(text) for name, text in _GAMMA_S_WORDS.items()})
    return entries


def catalog_keys() -> tuple[str, ...]:
    return tuple(_build())


def catalog_lookup(name: str) -> Presentation | Word:
    """Return the named catalog entry (immutable; shared is safe).

    Unknown keys raise ``KeyError`` listing the valid ones.
    """
    entries = _build()
    try:
        return entries[name]
    except KeyError:
        valid = ", ".join(sorted(entries))
        raise KeyError(f"unknown catalog entry {name!r}; valid keys: {valid}") from None


def word_entries() -> dict[str, Word]:
    """All catalog entries that are single words (no presentations)."""
    return {k: v for k, v in _build().items() if isinstance(v, Word)}


def gamma() -> Presentation:
    """The tetrahedral group Gamma(5,2,2,3,3,3) on x, y, z."""
    pres = catalog_lookup("gamma522333")
    assert isinstance(pres, Presentation)
    return pres


def gamma_prime() -> Presentation:
    """The tetrahedral group Gamma(5,2,2,6,2,3) on x', y', z'."""
    pres = catalog_lookup("gamma522623")
    assert isinstance(pres, Presentation)
    return pres


def embedding_images() -> dict[str, Word]:
    """Images of x, y, z under the index-2 embedding into gamma522623."""
    return {
        "x": Word.gen("x'"),
        "y": Word.gen("y'"),
        "z": Word.parse("z' y' z'"),
    }


def meridian_at_infinity(direction: int) -> Word:
    if direction not in (0, 1, 2):
        raise ValueError(f"meridian direction must be 0, 1 or 2, got {direction}")
    word = catalog_lookup(f"m_inf_{direction}")
    assert isinstance(word, Word)
    return word


def conjugator(point: int) -> Word:
    """The word g_{p_i} carrying infinity to the i-th fixed point (1..10)."""
    if not 1 <= point <= 10:
        raise ValueError(f"fixed-point index must be 1..10, got {point}")
    word = catalog_lookup(f"g_p{point}")
    assert isinstance(word, Word)
    return word


def knot_generator_words() -> dict[str, Word]:
    """The parabolic generating set a, f, h, o, u as words in x, y, z."""
    return {name.split(".")[1]: Word.parse(text) for name, text in _GAMMA_S_WORDS.items()}


def data_file_text() -> str:
    """Contents of the shipped mirror file ``data/catalog.txt``."""
    return resources.files("dodecknot.data").joinpath("catalog.txt").read_text("utf-8")


def data_file_words() -> dict[str, Word]:
    return parse_word_file(data_file_text())
