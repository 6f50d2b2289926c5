"""Permutations, signed reduced words, and elementary word moves.

Composition convention, fixed once for the whole package: products read
left to right, so ``u * v`` means "apply u first, then v".  A letter
sequence ``(i(1), ..., i(l))`` multiplies out as ``s_{i(1)} * ... * s_{i(l)}``
under the same reading.  Matrix lifts elsewhere multiply factors in the
same left-to-right order.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .errors import InapplicableMove, NonReducedWord

MIXED_SWAP = "MixedSwap"
SAME_INDEX_SWAP = "SameIndexSwap"
BRAID = "Braid"


@dataclass(frozen=True, order=True)
class Permutation:
    """A permutation of {1..n} stored in one-line notation.

    >>> w = Permutation((3, 1, 2))
    >>> w(1), w(2), w(3)
    (3, 1, 2)
    >>> (w * w.inverse()).is_identity()
    True
    """

    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {self.images}")

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        # left-to-right: (u * v)(i) = v(u(i))
        return Permutation(tuple(other.images[x - 1] for x in self.images))

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, x in enumerate(self.images, start=1):
            inv[x - 1] = i
        return Permutation(tuple(inv))

    def length(self) -> int:
        """Coxeter length, i.e. the inversion count.

        >>> Permutation.longest(4).length()
        6
        """
        im = self.images
        return sum(1 for i in range(len(im)) for j in range(i + 1, len(im)) if im[i] > im[j])

    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self.images, start=1))

    @staticmethod
    def identity(n: int) -> Permutation:
        return Permutation(tuple(range(1, n + 1)))

    @staticmethod
    def longest(n: int) -> Permutation:
        return Permutation(tuple(range(n, 0, -1)))

    @staticmethod
    def simple(n: int, i: int) -> Permutation:
        if not 1 <= i <= n - 1:
            raise ValueError(f"simple reflection index {i} out of range for n={n}")
        im = list(range(1, n + 1))
        im[i - 1], im[i] = im[i], im[i - 1]
        return Permutation(tuple(im))

    @staticmethod
    def from_one_line(text: str, n: int | None = None) -> Permutation:
        """Parse "321" or "3,2,1" one-line notation."""
        text = text.strip()
        if "," in text:
            parts = [int(t) for t in text.split(",") if t.strip()]
        else:
            parts = [int(c) for c in text]
        if n is not None and len(parts) != n:
            raise ValueError(f"expected one-line notation of length {n}, got {parts}")
        return Permutation(tuple(parts))

    def one_line(self) -> str:
        if self.n < 10:
            return "".join(str(x) for x in self.images)
        return ",".join(str(x) for x in self.images)

    def conjugate_by_longest(self) -> Permutation:
        """w0 * w * w0, i.e. relabel i -> n+1-i on both sides."""
        w0 = Permutation.longest(self.n)
        return w0 * self * w0


def product_of_simples(n: int, letters) -> Permutation:
    w = Permutation.identity(n)
    for i in letters:
        w = w * Permutation.simple(n, i)
    return w


def is_reduced(n: int, letters) -> bool:
    letters = tuple(letters)
    return product_of_simples(n, letters).length() == len(letters)


@dataclass(frozen=True)
class SignedWord:
    """A signed reduced word for a pair (u, v) of Weyl group elements.

    Negative letters spell a reduced word of u, positive letters one of v.
    Validity is checked eagerly: invalid words never circulate.

    >>> SignedWord(3, (-1, -2, -1, 1, 2, 1)).pair()[0].one_line()
    '321'
    >>> SignedWord(2, (1, 1))
    Traceback (most recent call last):
        ...
    clusterdt.errors.NonReducedWord: (1, 1) is not reduced: v-part (1, 1)
    """

    n: int
    letters: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        for l in self.letters:
            if l == 0 or not 1 <= abs(l) <= self.n - 1:
                raise NonReducedWord(f"letter {l} out of range for n={self.n}")
        if not is_reduced(self.n, self.u_word()):
            raise NonReducedWord(f"{self.letters} is not reduced: u-part {self.u_word()}")
        if not is_reduced(self.n, self.v_word()):
            raise NonReducedWord(f"{self.letters} is not reduced: v-part {self.v_word()}")

    def u_word(self) -> tuple[int, ...]:
        return tuple(-l for l in self.letters if l < 0)

    def v_word(self) -> tuple[int, ...]:
        return tuple(l for l in self.letters if l > 0)

    def pair(self) -> tuple[Permutation, Permutation]:
        return (product_of_simples(self.n, self.u_word()),
                product_of_simples(self.n, self.v_word()))

    def opposite(self) -> SignedWord:
        """The reversed word, a reduced word of (u^-1, v^-1)."""
        return SignedWord(self.n, tuple(reversed(self.letters)))

    def __len__(self) -> int:
        return len(self.letters)


def word_to_permutations(word: SignedWord) -> tuple[Permutation, Permutation]:
    """The pair (u, v) encoded by a signed word."""
    return word.pair()


def greedy_word(w: Permutation) -> tuple[int, ...]:
    """The greedy reduced word of ``w``.

    Peels the top value n down to its slot, then recurses on the
    remaining element of S_{n-1}; implemented iteratively.  Trailing
    fixed points emit nothing.

    >>> greedy_word(Permutation.longest(3))
    (1, 2, 1)
    >>> greedy_word(Permutation((1, 3, 2)))
    (2,)
    >>> greedy_word(Permutation.identity(4))
    ()
    """
    images = list(w.images)
    out: list[int] = []
    for m in range(len(images), 1, -1):
        k = images.index(m) + 1  # w^{-1}(m) in the current S_m view
        out.extend(range(k, m))
        images.pop(k - 1)
    return tuple(out)


def greedy_pair_word(u: Permutation, v: Permutation) -> SignedWord:
    """The greedy signed word of (u, v): negated greedy word of u,
    then the reversed greedy word of v^-1.

    >>> w0 = Permutation.longest(3)
    >>> greedy_pair_word(w0, w0).letters
    (-1, -2, -1, 1, 2, 1)
    """
    if u.n != v.n:
        raise ValueError("u and v must have the same rank")
    neg = tuple(-i for i in greedy_word(u))
    pos = tuple(reversed(greedy_word(v.inverse())))
    return SignedWord(u.n, neg + pos)


@dataclass(frozen=True)
class WordMove:
    """One elementary rewriting move on a signed word.

    MixedSwap exchanges adjacent opposite-sign letters with distinct
    absolute values; SameIndexSwap exchanges adjacent opposite-sign
    letters with equal absolute value; Braid rewrites a same-sign
    pattern (a, b, a) with |a| and |b| adjacent indices to (b, a, b).
    """

    kind: str
    position: int
    direction: str = field(default="forward", compare=False)


def _check_applicable(word: SignedWord, move: WordMove) -> None:
    ls, p = word.letters, move.position
    if move.kind in (MIXED_SWAP, SAME_INDEX_SWAP):
        if not 0 <= p <= len(ls) - 2:
            raise InapplicableMove(f"position {p} has no adjacent pair in {ls}")
        a, b = ls[p], ls[p + 1]
        if a * b >= 0:
            raise InapplicableMove(f"letters ({a},{b}) at {p} do not have opposite signs")
        if move.kind == MIXED_SWAP and abs(a) == abs(b):
            raise InapplicableMove(f"letters ({a},{b}) at {p} share an index; use {SAME_INDEX_SWAP}")
        if move.kind == SAME_INDEX_SWAP and abs(a) != abs(b):
            raise InapplicableMove(f"letters ({a},{b}) at {p} have distinct indices; use {MIXED_SWAP}")
    elif move.kind == BRAID:
        if not 0 <= p <= len(ls) - 3:
            raise InapplicableMove(f"position {p} has no triple in {ls}")
        a, b, c = ls[p], ls[p + 1], ls[p + 2]
        if a != c or a * b <= 0 or abs(abs(a) - abs(b)) != 1:
            raise InapplicableMove(f"letters ({a},{b},{c}) at {p} are not a braid pattern")
    else:
        raise InapplicableMove(f"unknown move kind {move.kind!r}")


def apply_move(word: SignedWord, move: WordMove) -> SignedWord:
    """Rewrite ``word`` by ``move``; the pair (u, v) is preserved.

    >>> apply_move(SignedWord(3, (1, -2)), WordMove(MIXED_SWAP, 0)).letters
    (-2, 1)
    >>> apply_move(SignedWord(3, (1, 2, 1)), WordMove(BRAID, 0)).letters
    (2, 1, 2)
    >>> apply_move(SignedWord(2, (1, -1)), WordMove(SAME_INDEX_SWAP, 0)).letters
    (-1, 1)
    """
    _check_applicable(word, move)
    ls, p = list(word.letters), move.position
    if move.kind in (MIXED_SWAP, SAME_INDEX_SWAP):
        ls[p], ls[p + 1] = ls[p + 1], ls[p]
    else:
        a, b = ls[p], ls[p + 1]
        ls[p:p + 3] = [b, a, b]
    return SignedWord(word.n, tuple(ls))


def move_mutates(move: WordMove) -> bool:
    """SameIndexSwap and Braid induce a seed mutation; MixedSwap does not."""
    return move.kind in (SAME_INDEX_SWAP, BRAID)


def moves_of(word: SignedWord) -> tuple[WordMove, ...]:
    """All moves applicable to ``word``."""
    ls = word.letters
    out: list[WordMove] = []
    for p in range(len(ls) - 1):
        a, b = ls[p], ls[p + 1]
        if a * b < 0:
            out.append(WordMove(SAME_INDEX_SWAP if abs(a) == abs(b) else MIXED_SWAP, p))
    for p in range(len(ls) - 2):
        a, b, c = ls[p], ls[p + 1], ls[p + 2]
        if a == c and a * b > 0 and abs(abs(a) - abs(b)) == 1:
            out.append(WordMove(BRAID, p))
    return tuple(out)


def all_reduced_words(u: Permutation, v: Permutation) -> tuple[SignedWord, ...]:
    """Every reduced word of (u, v), found by move search from the greedy word."""
    start = greedy_pair_word(u, v)
    seen = {start.letters: start}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for m in moves_of(w):
            w2 = apply_move(w, m)
            if w2.letters not in seen:
                seen[w2.letters] = w2
                queue.append(w2)
    return tuple(seen[k] for k in sorted(seen))


def move_path(src: SignedWord, dst: SignedWord) -> tuple[WordMove, ...]:
    """A move sequence turning ``src`` into ``dst`` (BFS, shortest)."""
    if src.n != dst.n or src.pair() != dst.pair():
        raise NonReducedWord("words do not encode the same pair (u, v)")
    if src.letters == dst.letters:
        return ()
    parent: dict[tuple[int, ...], tuple[tuple[int, ...], WordMove]] = {}
    queue = deque([src])
    seen = {src.letters}
    while queue:
        w = queue.popleft()
        for m in moves_of(w):
            w2 = apply_move(w, m)
            if w2.letters in seen:
                continue
            seen.add(w2.letters)
            parent[w2.letters] = (w.letters, m)
            if w2.letters == dst.letters:
                path: list[WordMove] = []
                cur = dst.letters
                while cur != src.letters:
                    cur, m = parent[cur]
                    path.append(m)
                return tuple(reversed(path))
            queue.append(w2)
    raise NonReducedWord("move search exhausted without reaching the target word")
