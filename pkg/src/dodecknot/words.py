"""Words and presentations over named generator alphabets.

A word is a freely reduced sequence of signed letters ``(generator, ±1)``.
Words multiply by concatenation followed by free reduction, so they behave
like elements of the free group on their alphabet.  A ``Presentation``
bundles an ordered generator alphabet with a list of relator words; the
generators carrying a ``g*g`` relator are flagged as involutions, which the
coset enumerator exploits (a single action column per involution).

The module also implements the tiny plain-text word-file format used to
mirror the built-in catalog: UTF-8 lines of the form ``name = tok tok ...``
where each token is a generator name, optionally suffixed ``^k`` for an
integer exponent, and ``#`` starts a comment.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping

Letter = tuple[str, int]


def _freely_reduce(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    out: list[Letter] = []
    for gen, exp in letters:
        if exp not in (1, -1):
            raise ValueError(f"letter exponent must be ±1, got {exp!r}")
        if out and out[-1][0] == gen and out[-1][1] == -exp:
            out.pop()
        else:
            out.append((gen, exp))
    return tuple(out)


class Word:
    """A freely reduced word; the empty word is the identity.

    Instances are immutable and hashable.  The constructor freely reduces
    its input, so the "no adjacent ``g g^-1`` pair" invariant always holds.
    """

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[Letter] = ()) -> None:
        object.__setattr__(self, "letters", _freely_reduce(letters))

    def __setattr__(self, name: str, value) -> None:
        raise AttributeError("Word is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def identity(cls) -> "Word":
        return _IDENTITY

    @classmethod
    def gen(cls, name: str, exp: int = 1) -> "Word":
        """Single-generator word ``name^exp`` (exp any nonzero integer)."""
        sign = 1 if exp > 0 else -1
        return cls(((name, sign),) * abs(exp))

    @classmethod
    def parse(cls, text: str) -> "Word":
        """Parse ``"x y^-1 z"`` (whitespace or ``*`` separated tokens)."""
        letters: list[Letter] = []
        for token in text.replace("*", " ").split():
            name, caret, exp_text = token.partition("^")
            if not name:
                raise ValueError(f"malformed token {token!r}")
            if caret:
                try:
                    exp = int(exp_text)
                except ValueError:
                    raise ValueError(f"malformed exponent in token {token!r}") from None
            else:
                exp = 1
            if exp == 0:
                continue
            letters.extend(((name, 1 if exp > 0 else -1),) * abs(exp))
        return cls(letters)

    # -- group operations ---------------------------------------------

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def inverse(self) -> "Word":
        return Word(tuple((gen, -exp) for gen, exp in reversed(self.letters)))

    def __invert__(self) -> "Word":
        return self.inverse()

    def __pow__(self, n: int) -> "Word":
        if n < 0:
            return self.inverse() ** (-n)
        out = _IDENTITY
        for _ in range(n):
            out = out * self
        return out

    def conjugated_by(self, g: "Word") -> "Word":
        """Return ``g * self * g^-1``."""
        return g * self * g.inverse()

    # -- queries --------------------------------------------------------

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __eq__(self, other) -> bool:
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self) -> int:
        return hash(self.letters)

    def generators(self) -> set[str]:
        return {gen for gen, _ in self.letters}

    def cyclically_reduced(self) -> "Word":
        letters = list(self.letters)
        while len(letters) >= 2 and letters[0][0] == letters[-1][0] \
                and letters[0][1] == -letters[-1][1]:
            letters = letters[1:-1]
        return Word(letters)

    def normalized(self, involutions: frozenset[str] | set[str]) -> "Word":
        """Rewrite ``g^-1`` as ``g`` for involution generators.

        Adjacent equal involution letters cancel (``g*g = 1`` in the
        group), so the result represents the same group element and is
        never longer than the input.
        """
        out: list[Letter] = []
        for gen, exp in self.letters:
            if gen in involutions:
                if out and out[-1] == (gen, 1):
                    out.pop()
                    continue
                out.append((gen, 1))
            elif out and out[-1][0] == gen and out[-1][1] == -exp:
                out.pop()
            else:
                out.append((gen, exp))
        return Word(out)

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return " ".join(g if e == 1 else f"{g}^-1" for g, e in self.letters)

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"


_IDENTITY = Word()


def free_reduce(word: Word) -> Word:
    """Freely reduced form of ``word`` (a no-op: words stay reduced)."""
    return Word(word.letters)


def substitute(word: Word, images: Mapping[str, Word]) -> Word:
    """Apply the homomorphism ``g -> images[g]`` and freely reduce.

    Every generator occurring in ``word`` must have an image; a missing
    one raises ``ValueError`` naming the generator.
    """
    letters: list[Letter] = []
    for gen, exp in word.letters:
        try:
            image = images[gen]
        except KeyError:
            raise ValueError(f"no image given for generator '{gen}'") from None
        letters.extend(image.letters if exp == 1 else image.inverse().letters)
    return Word(letters)


class Presentation:
    """A finitely presented group: generators plus relator words.

    Relators are freely and cyclically reduced at construction and must
    only use declared generators.  ``involutions`` is computed as exactly
    the set of generators appearing in a length-2 relator ``g*g`` (or its
    inverse), matching the order-2 generators of the group.
    """

    __slots__ = ("generators", "relators", "involutions")

    def __init__(self, generators: Iterable[str], relators: Iterable[Word]) -> None:
        gens = tuple(generators)
        if len(set(gens)) != len(gens):
            raise ValueError("duplicate generator names")
        gen_set = set(gens)
        reduced: list[Word] = []
        for rel in relators:
            unknown = rel.generators() - gen_set
            if unknown:
                raise ValueError(f"relator {rel} uses undeclared generators {sorted(unknown)}")
            rel = rel.cyclically_reduced()
            if rel:
                reduced.append(rel)
        involutions = frozenset(
            rel.letters[0][0]
            for rel in reduced
            if len(rel) == 2 and rel.letters[0] == rel.letters[1]
        )
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "relators", tuple(reduced))
        object.__setattr__(self, "involutions", involutions)

    def __setattr__(self, name: str, value) -> None:
        raise AttributeError("Presentation is immutable")

    @classmethod
    def parse(cls, generators: str, relator_text: Iterable[str]) -> "Presentation":
        return cls(generators.split(), [Word.parse(t) for t in relator_text])

    def with_relators(self, extra: Iterable[Word]) -> "Presentation":
        """A new presentation with additional relators (a quotient group)."""
        return Presentation(self.generators, self.relators + tuple(extra))

    def renamed(self, mapping: Mapping[str, str]) -> "Presentation":
        gens = tuple(mapping.get(g, g) for g in self.generators)
        rels = [Word((mapping.get(g, g), e) for g, e in rel) for rel in self.relators]
        return Presentation(gens, rels)

    def normalized_relators(self) -> tuple[Word, ...]:
        """Relators with involutions normalized; empties dropped."""
        out = []
        for rel in self.relators:
            norm = rel.normalized(self.involutions).cyclically_reduced()
            if norm:
                out.append(norm)
        return tuple(out)

    def has_relator(self, word: Word) -> bool:
        """Is ``word`` a relator up to cyclic rotation and inversion?"""
        target = _cyclic_canonical(word.normalized(self.involutions))
        return any(
            _cyclic_canonical(rel.normalized(self.involutions)) == target
            for rel in self.relators
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Presentation)
            and self.generators == other.generators
            and self.relators == other.relators
        )

    def __hash__(self) -> int:
        return hash((self.generators, self.relators))

    def __repr__(self) -> str:
        rels = ", ".join(str(r) for r in self.relators)
        return f"<Presentation on {' '.join(self.generators)} | {rels}>"


def _cyclic_canonical(word: Word) -> tuple[Letter, ...]:
    """Least rotation among all rotations of the word and its inverse."""
    word = word.cyclically_reduced()
    candidates: list[tuple[Letter, ...]] = []
    for w in (word, word.inverse()):
        ls = w.letters
        candidates.extend(ls[i:] + ls[:i] for i in range(max(len(ls), 1)))
    return min(candidates) if candidates else ()


# -- word-file format -------------------------------------------------


def parse_word_file(text: str) -> dict[str, Word]:
    """Parse ``name = tok tok ...`` lines; ``#`` comments; blank lines ok."""
    entries: dict[str, Word] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        name, eq, body = line.partition("=")
        if not eq:
            raise ValueError(f"line {lineno}: expected 'name = word', got {raw!r}")
        name = name.strip()
        if not name:
            raise ValueError(f"line {lineno}: empty entry name")
        if name in entries:
            raise ValueError(f"line {lineno}: duplicate entry {name!r}")
        entries[name] = Word.parse(body)
    return entries


def format_word_file(entries: Mapping[str, Word], header: str = "") -> str:
    lines = [f"# {line}" for line in header.splitlines() if line] if header else []
    lines.extend(f"{name} = {word}" for name, word in entries.items())
    return "\n".join(lines) + "\n"
