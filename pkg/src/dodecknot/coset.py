"""Todd-Coxeter coset enumeration for finitely presented groups.

Given a presentation and a finite list of subgroup generator words, the
enumerator builds the action of the generators on the right cosets of
the subgroup.  When it closes within the coset cap, the index, a
shortlex Schreier transversal, membership tests, and the permutation
action are all available; hitting the cap is a normal ``exceeded``
result carrying no index claim.

Two strategies are provided.  The default is HLT with lookahead:
relators are scanned and filled from every live coset in
first-definition order, rows are completed afterwards, and when the cap
is reached a definition-free lookahead pass replays all relators hoping
for a collapse.  The Felsch strategy defines one table entry at a time
and drains a deduction stack against all cyclic rotations of the
relators, which keeps tables minimal and cross-checks the HLT results.
Coincidences are processed immediately with a union-find (merge into the
smaller coset number, replay the queue), so coset numbering -- and hence
the transversal -- is deterministic for fixed inputs and strategy.

Generators with an order-2 relator get a single self-inverse action
column, halving the effective alphabet for the Coxeter-type groups this
package cares about.
"""

from __future__ import annotations

from .words import Presentation, Word

DEFAULT_MAX_COSETS = 1_000_000

CLOSED = "closed"
EXCEEDED = "exceeded"


class _CapHit(Exception):
    pass


class Alphabet:
    """Column layout for a presentation: one column per letter, a single
    shared column for involution generators."""

    __slots__ = ("presentation", "letters", "col_of", "inv_col")

    def __init__(self, presentation: Presentation) -> None:
        letters: list[tuple[str, int]] = []
        col_of: dict[tuple[str, int], int] = {}
        inv_col: list[int] = []
        for gen in presentation.generators:
            if gen in presentation.involutions:
                col = len(letters)
                letters.append((gen, 1))
                col_of[(gen, 1)] = col
                col_of[(gen, -1)] = col
                inv_col.append(col)
            else:
                col = len(letters)
                letters.append((gen, 1))
                letters.append((gen, -1))
                col_of[(gen, 1)] = col
                col_of[(gen, -1)] = col + 1
                inv_col.extend((col + 1, col))
        self.presentation = presentation
        self.letters = tuple(letters)
        self.col_of = col_of
        self.inv_col = tuple(inv_col)

    def word_cols(self, word: Word) -> tuple[int, ...]:
        norm = word.normalized(self.presentation.involutions)
        try:
            return tuple(self.col_of[letter] for letter in norm)
        except KeyError:
            unknown = sorted(norm.generators() - set(self.presentation.generators))
            raise ValueError(
                f"word {word} uses generators {unknown} not in the presentation"
            ) from None

    def letter_word(self, col: int) -> Word:
        return Word((self.letters[col],))


class CosetTable:
    """A finished enumeration: either a closed table or an exceeded stub.

    Closed tables are complete (no undefined entries), compatible (every
    relator traces back to its start from every coset, every subgroup
    generator fixes coset 0), and immutable.  Cosets are numbered from 0;
    coset 0 is the subgroup itself and ``transversal[0]`` is the empty
    word.
    """

    def __init__(self, presentation, subgroup_generators, alphabet, status,
                 cols, max_cosets):
        self.presentation = presentation
        self.subgroup_generators = tuple(subgroup_generators)
        self.alphabet = alphabet
        self.status = status
        self._cols = cols
        self.max_cosets = max_cosets
        self._transversal: tuple[Word, ...] | None = None

    # -- basic queries ---------------------------------------------------

    @property
    def is_closed(self) -> bool:
        return self.status == CLOSED

    def _require_closed(self) -> None:
        if not self.is_closed:
            raise ValueError(
                "enumeration exceeded the coset cap "
                f"({self.max_cosets}); no table is available"
            )

    @property
    def coset_count(self) -> int:
        self._require_closed()
        return len(self._cols[0]) if self._cols else 1

    @property
    def index(self) -> int:
        """The subgroup index [G : H] (only for closed tables)."""
        return self.coset_count

    def step(self, coset: int, gen: str, exp: int = 1) -> int:
        self._require_closed()
        return self._cols[self.alphabet.col_of[(gen, exp)]][coset]

    def trace(self, coset: int, word: Word) -> int:
        """Right action of ``word`` starting at ``coset``."""
        self._require_closed()
        for col in self.alphabet.word_cols(word):
            coset = self._cols[col][coset]
        return coset

    def contains(self, word: Word) -> bool:
        """Is ``word`` an element of the enumerated subgroup?"""
        return self.trace(0, word) == 0

    def action(self, word: Word) -> tuple[int, ...]:
        """The permutation of cosets induced by right multiplication."""
        self._require_closed()
        cols = self._cols
        perm = list(range(self.coset_count))
        for col in self.alphabet.word_cols(word):
            column = cols[col]
            perm = [column[c] for c in perm]
        return tuple(perm)

    @property
    def transversal(self) -> tuple[Word, ...]:
        """Shortlex Schreier transversal; entry c traces coset 0 to c."""
        self._require_closed()
        if self._transversal is None:
            n = self.coset_count
            words: list[Word | None] = [None] * n
            words[0] = Word.identity()
            queue = [0]
            head = 0
            while head < len(queue):
                coset = queue[head]
                head += 1
                base = words[coset]
                assert base is not None
                for col, letter in enumerate(self.alphabet.letters):
                    target = self._cols[col][coset]
                    if words[target] is None:
                        words[target] = base * Word((letter,))
                        queue.append(target)
            self._transversal = tuple(w for w in words if w is not None)
            assert len(self._transversal) == n
        return self._transversal

    def validate(self) -> None:
        """Assert the closed-table invariants (used by tests and the
        enumerator itself before publishing a closed result)."""
        self._require_closed()
        n = self.coset_count
        cols = self._cols
        alphabet = self.alphabet
        for col, inv in enumerate(alphabet.inv_col):
            column, inv_column = cols[col], cols[inv]
            for coset in range(n):
                target = column[coset]
                if not 0 <= target < n or inv_column[target] != coset:
                    raise AssertionError(f"columns {col}/{inv} are not mutually inverse")
        for rel in self.presentation.normalized_relators():
            rel_cols = alphabet.word_cols(rel)
            for coset in range(n):
                current = coset
                for col in rel_cols:
                    current = cols[col][current]
                if current != coset:
                    raise AssertionError(f"relator {rel} does not close at coset {coset}")
        for gen in self.subgroup_generators:
            if self.trace(0, gen) != 0:
                raise AssertionError(f"subgroup generator {gen} does not fix coset 0")

    def to_csv(self) -> str:
        """Table dump: one row per coset, one column per letter, plus the
        transversal word."""
        self._require_closed()
        header = ["coset"] + [
            g if e == 1 else f"{g}^-1" for g, e in self.alphabet.letters
        ] + ["transversal"]
        lines = [",".join(header)]
        transversal = self.transversal
        for coset in range(self.coset_count):
            row = [str(coset)]
            row += [str(col[coset]) for col in self._cols]
            row.append(str(transversal[coset]))
            lines.append(",".join(row))
        return "\n".join(lines) + "\n"

    def __repr__(self) -> str:
        if self.is_closed:
            return f"<CosetTable closed, index {self.index}>"
        return f"<CosetTable exceeded at cap {self.max_cosets}>"


class _Enumerator:
    def __init__(self, presentation: Presentation, subgens: list[Word],
                 max_cosets: int, felsch: bool) -> None:
        self.alphabet = Alphabet(presentation)
        self.n_letters = len(self.alphabet.letters)
        self.max_cosets = max_cosets
        self.felsch = felsch
        self.cols: list[list[int]] = [[-1] for _ in range(self.n_letters)]
        self.p = [0]
        self.n_alive = 1
        self.inv_col = self.alphabet.inv_col
        self.deductions: list[tuple[int, int]] = []
        self.progress = 0  # bumped by every definition and coincidence

        self.rel_cols = [
            self.alphabet.word_cols(rel)
            for rel in presentation.normalized_relators()
        ]
        self.subgen_cols = [
            cols for w in subgens if (cols := self.alphabet.word_cols(w))
        ]
        if felsch:
            buckets: dict[int, list[tuple[int, ...]]] = {}
            seen = set()
            for rel in self.rel_cols:
                for k in range(len(rel)):
                    rotation = rel[k:] + rel[:k]
                    if rotation not in seen:
                        seen.add(rotation)
                        buckets.setdefault(rotation[0], []).append(rotation)
            self.rel_by_col = buckets

    # -- union-find -------------------------------------------------------

    def rep(self, k: int) -> int:
        p = self.p
        r = k
        while p[r] != r:
            r = p[r]
        while p[k] != r:
            p[k], k = r, p[k]
        return r

    # -- table updates ----------------------------------------------------

    def define(self, alpha: int, col: int) -> int:
        if self.n_alive >= self.max_cosets:
            raise _CapHit
        beta = len(self.p)
        self.p.append(beta)
        for column in self.cols:
            column.append(-1)
        self.cols[col][alpha] = beta
        self.cols[self.inv_col[col]][beta] = alpha
        self.n_alive += 1
        self.progress += 1
        if self.felsch:
            self.deductions.append((alpha, col))
        return beta

    def _merge(self, k: int, lam: int, queue: list[int]) -> None:
        phi1, phi2 = self.rep(k), self.rep(lam)
        if phi1 != phi2:
            mu, nu = (phi1, phi2) if phi1 < phi2 else (phi2, phi1)
            self.p[nu] = mu
            queue.append(nu)
            self.n_alive -= 1
            self.progress += 1

    def coincidence(self, alpha: int, beta: int) -> None:
        cols = self.cols
        inv_col = self.inv_col
        queue: list[int] = []
        self._merge(alpha, beta, queue)
        head = 0
        while head < len(queue):
            gamma = queue[head]
            head += 1
            for col in range(self.n_letters):
                delta = cols[col][gamma]
                if delta < 0:
                    continue
                cols[inv_col[col]][delta] = -1
                mu = self.rep(gamma)
                nu = self.rep(delta)
                existing = cols[col][mu]
                if existing >= 0:
                    self._merge(nu, existing, queue)
                else:
                    existing_rev = cols[inv_col[col]][nu]
                    if existing_rev >= 0:
                        self._merge(mu, existing_rev, queue)
                    else:
                        cols[col][mu] = nu
                        cols[inv_col[col]][nu] = mu
                        if self.felsch:
                            self.deductions.append((mu, col))

    # -- scanning -----------------------------------------------------------

    def scan_and_fill(self, alpha: int, word: tuple[int, ...]) -> None:
        cols = self.cols
        inv_col = self.inv_col
        f = alpha
        b = alpha
        i = 0
        j = len(word) - 1
        while True:
            while i <= j:
                target = cols[word[i]][f]
                if target < 0:
                    break
                f = target
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i:
                source = cols[inv_col[word[j]]][b]
                if source < 0:
                    break
                b = source
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if j == i:
                cols[word[i]][f] = b
                cols[inv_col[word[i]]][b] = f
                self.progress += 1
                if self.felsch:
                    self.deductions.append((f, word[i]))
                return
            self.define(f, word[i])

    def scan(self, alpha: int, word: tuple[int, ...]) -> None:
        """Definition-free scan: only deductions and coincidences."""
        cols = self.cols
        inv_col = self.inv_col
        f = alpha
        b = alpha
        i = 0
        j = len(word) - 1
        while i <= j:
            target = cols[word[i]][f]
            if target < 0:
                break
            f = target
            i += 1
        if i > j:
            if f != b:
                self.coincidence(f, b)
            return
        while j >= i:
            source = cols[inv_col[word[j]]][b]
            if source < 0:
                break
            b = source
            j -= 1
        if j < i:
            self.coincidence(f, b)
        elif j == i:
            cols[word[i]][f] = b
            cols[inv_col[word[i]]][b] = f
            self.progress += 1
            if self.felsch:
                self.deductions.append((f, word[i]))

    def lookahead(self) -> None:
        for word in self.subgen_cols:
            self.scan(0, word)
        p = self.p
        alpha = 0
        while alpha < len(p):
            if p[alpha] == alpha:
                for rel in self.rel_cols:
                    self.scan(alpha, rel)
                    if p[alpha] != alpha:
                        break
            alpha += 1

    # -- deduction processing (Felsch) ----------------------------------

    def process_deductions(self) -> None:
        deductions = self.deductions
        cols = self.cols
        p = self.p
        while deductions:
            alpha, col = deductions.pop()
            if p[alpha] == alpha:
                for rel in self.rel_by_col.get(col, ()):
                    self.scan(alpha, rel)
                    if p[alpha] != alpha:
                        break
            beta = cols[col][alpha] if p[alpha] == alpha else -1
            if beta >= 0 and p[beta] == beta:
                for rel in self.rel_by_col.get(self.inv_col[col], ()):
                    self.scan(beta, rel)
                    if p[beta] != beta:
                        break

    # -- strategies ----------------------------------------------------------

    def run_hlt(self) -> str:
        fresh_lookahead = False
        while True:
            try:
                self._hlt_pass()
            except _CapHit:
                if fresh_lookahead:
                    return EXCEEDED
                before = self.n_alive
                self.lookahead()
                if self.n_alive >= self.max_cosets:
                    return EXCEEDED
                fresh_lookahead = self.n_alive > 0.95 * before
                continue
            return CLOSED

    def _hlt_pass(self) -> None:
        """Scan everything with fill until a pass changes nothing."""
        while True:
            before = self.progress
            for word in self.subgen_cols:
                self.scan_and_fill(0, word)
            p = self.p
            cols = self.cols
            alpha = 0
            while alpha < len(p):
                if p[alpha] == alpha:
                    for rel in self.rel_cols:
                        self.scan_and_fill(alpha, rel)
                        if p[alpha] != alpha:
                            break
                    if p[alpha] == alpha:
                        for col in range(self.n_letters):
                            if cols[col][alpha] < 0:
                                self.define(alpha, col)
                alpha += 1
            if self.progress == before:
                return

    def run_felsch(self) -> str:
        try:
            for word in self.subgen_cols:
                self.scan_and_fill(0, word)
            self.process_deductions()
            while True:
                before = self.progress
                p = self.p
                cols = self.cols
                alpha = 0
                while alpha < len(p):
                    if p[alpha] == alpha:
                        for col in range(self.n_letters):
                            if p[alpha] != alpha:
                                break
                            if cols[col][alpha] < 0:
                                self.define(alpha, col)
                                self.process_deductions()
                    alpha += 1
                for word in self.subgen_cols:
                    self.scan_and_fill(0, word)
                self.process_deductions()
                if self.progress == before:
                    return CLOSED
        except _CapHit:
            return EXCEEDED

    # -- publishing ----------------------------------------------------------

    def compressed_columns(self) -> list[list[int]]:
        p = self.p
        live = [k for k in range(len(p)) if p[k] == k]
        renumber = {old: new for new, old in enumerate(live)}
        out: list[list[int]] = []
        for column in self.cols:
            out.append([renumber[self.rep(column[old])] for old in live])
        return out


def enumerate_cosets(
    presentation: Presentation,
    subgroup_generators: list[Word] | tuple[Word, ...] = (),
    max_cosets: int = DEFAULT_MAX_COSETS,
    strategy: str = "hlt",
) -> CosetTable:
    """Enumerate the cosets of the subgroup generated by the given words.

    Returns a closed table whose ``index`` is the subgroup index when
    the enumeration finishes within ``max_cosets`` live cosets, and an
    ``exceeded`` stub otherwise.  Deterministic for fixed inputs and
    strategy (cosets are numbered in definition order).
    """
    if max_cosets < 1:
        raise ValueError("max_cosets must be at least 1")
    if strategy not in ("hlt", "felsch"):
        raise ValueError(f"unknown strategy {strategy!r}")
    subgens = list(subgroup_generators)
    enum = _Enumerator(presentation, subgens, max_cosets, felsch=strategy == "felsch")
    status = enum.run_felsch() if strategy == "felsch" else enum.run_hlt()
    if status == CLOSED:
        table = CosetTable(presentation, subgens, enum.alphabet, CLOSED,
                           enum.compressed_columns(), max_cosets)
        table.validate()
        return table
    return CosetTable(presentation, subgens, enum.alphabet, EXCEEDED, None, max_cosets)


def subgroup_contains(table: CosetTable, word: Word) -> bool:
    """True iff ``word`` lies in the enumerated subgroup (trace fixes 0)."""
    return table.contains(word)


def coset_action(table: CosetTable, word: Word) -> tuple[int, ...]:
    """Permutation of the cosets induced by right multiplication."""
    return table.action(word)
