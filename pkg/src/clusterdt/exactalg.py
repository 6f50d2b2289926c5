"""Exact arithmetic: sparse integer Laurent polynomials, their fraction
field, matrices over that field, minors, Gaussian decomposition, the
elementary group generators and Weyl lifts, and tropical evaluation.

Variable identifiers are opaque integers (face ids are issued by the
graph module); nothing here interprets them.  All coefficients are
arbitrary-precision Python integers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from . import weyl
from .errors import (
    IndexOutOfRange,
    NotGaussianDecomposable,
    SingularMatrix,
    ZeroFunction,
)

# A monomial is a sorted tuple of (variable id, nonzero exponent) pairs.
Monomial = tuple[tuple[int, int], ...]

_EMPTY: Monomial = ()


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    out: list[tuple[int, int]] = []
    i = j = 0
    while i < len(a) and j < len(b):
        va, ea = a[i]
        vb, eb = b[j]
        if va == vb:
            e = ea + eb
            if e:
                out.append((va, e))
            i += 1
            j += 1
        elif va < vb:
            out.append(a[i])
            i += 1
        else:
            out.append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return tuple(out)


def _mono_exp(m: Monomial, var: int) -> int:
    for v, e in m:
        if v == var:
            return e
    return 0


class LaurentPoly:
    """A sparse Laurent polynomial with integer coefficients.

    >>> x, y = LaurentPoly.var(1), LaurentPoly.var(2)
    >>> str((x + y) * (x - y))
    'X1^2 - X2^2'
    >>> (x ** -2).degree(1)
    -2
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, int]):
        self.terms: dict[Monomial, int] = {m: c for m, c in terms.items() if c}

    # ------------------------------------------------------------------
    @staticmethod
    def zero() -> LaurentPoly:
        return LaurentPoly({})

    @staticmethod
    def const(c: int) -> LaurentPoly:
        return LaurentPoly({_EMPTY: int(c)})

    @staticmethod
    def one() -> LaurentPoly:
        return LaurentPoly.const(1)

    @staticmethod
    def var(v: int, exp: int = 1) -> LaurentPoly:
        if exp == 0:
            return LaurentPoly.one()
        return LaurentPoly({((v, exp),): 1})

    @staticmethod
    def monomial(exps: Mapping[int, int], coeff: int = 1) -> LaurentPoly:
        m = tuple(sorted((v, e) for v, e in exps.items() if e))
        return LaurentPoly({m: coeff})

    # ------------------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {_EMPTY: 1}

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: LaurentPoly) -> LaurentPoly:
        if not self.terms:
            return other
        if not other.terms:
            return self
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return LaurentPoly(out)

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: LaurentPoly) -> LaurentPoly:
        return self + (-other)

    def __mul__(self, other: LaurentPoly) -> LaurentPoly:
        if not self.terms or not other.terms:
            return LaurentPoly.zero()
        if self.is_one():
            return other
        if other.is_one():
            return self
        out: dict[Monomial, int] = {}
        small, big = (self.terms, other.terms)
        if len(small) > len(big):
            small, big = big, small
        for m1, c1 in small.items():
            for m2, c2 in big.items():
                m = _mono_mul(m1, m2)
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return LaurentPoly(out)

    def __pow__(self, e: int) -> LaurentPoly:
        if e < 0:
            raise ValueError("negative power of a LaurentPoly; use RatFunc")
        result = LaurentPoly.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # ------------------------------------------------------------------
    def degree(self, var: int) -> int:
        """Largest exponent of ``var`` over all monomials."""
        if not self.terms:
            raise ZeroFunction("degree of the zero polynomial")
        return max(_mono_exp(m, var) for m in self.terms)

    def min_exponents(self) -> dict[int, int]:
        """Per-variable minimum exponent over all monomials (0 if absent)."""
        if not self.terms:
            return {}
        out: dict[int, int] = {}
        seen_all: set[int] = set()
        for m in self.terms:
            seen_all.update(v for v, _ in m)
        for v in seen_all:
            out[v] = min(_mono_exp(m, v) for m in self.terms)
        return {v: e for v, e in out.items() if e}

    def variables(self) -> set[int]:
        out: set[int] = set()
        for m in self.terms:
            out.update(v for v, _ in m)
        return out

    def content(self) -> int:
        return math.gcd(*(abs(c) for c in self.terms.values())) if self.terms else 0

    def shift(self, exps: Mapping[int, int]) -> LaurentPoly:
        """Multiply by the monomial with the given exponents."""
        m0 = tuple(sorted((v, e) for v, e in exps.items() if e))
        if not m0:
            return self
        return LaurentPoly({_mono_mul(m, m0): c for m, c in self.terms.items()})

    def scale(self, k: int) -> LaurentPoly:
        if k == 1:
            return self
        return LaurentPoly({m: c * k for m, c in self.terms.items()})

    def eval_fraction(self, values: Mapping[int, Fraction]) -> Fraction:
        total = Fraction(0)
        for m, c in self.terms.items():
            term = Fraction(c)
            for v, e in m:
                term *= Fraction(values[v]) ** e
            total += term
        return total

    def eval_ratfunc(self, values: Mapping[int, "RatFunc"],
                     cache: dict | None = None) -> "RatFunc":
        """Evaluate at RatFunc values.  The whole sum is assembled over
        one common denominator, so every intermediate is a plain
        polynomial product; ``cache`` memoizes powers across calls."""
        if not self.terms:
            return RatFunc.zero()
        if cache is None:
            cache = {}

        def power(which: str, v: int, e: int) -> LaurentPoly:
            key = (which, v, e)
            got = cache.get(key)
            if got is None:
                base = values[v].num if which == "n" else values[v].den
                got = base ** e
                cache[key] = got
            return got

        # shift so all exponents are >= 0; the shift re-enters as a prefix
        mins = self.min_exponents()
        body = self.shift({v: -e for v, e in mins.items()})
        tops: dict[int, int] = {}
        for m in body.terms:
            for v, e in m:
                if e > tops.get(v, 0):
                    tops[v] = e
        num_total = LaurentPoly.zero()
        for m, c in body.terms.items():
            exp = dict(m)
            term = LaurentPoly.const(c)
            for v, top in tops.items():
                e = exp.get(v, 0)
                if e:
                    term = term * power("n", v, e)
                if top - e:
                    term = term * power("d", v, top - e)
            num_total = num_total + term
        den_total = LaurentPoly.one()
        for v, top in tops.items():
            den_total = den_total * power("d", v, top)
        out = RatFunc(num_total, den_total)
        for v, e in mins.items():
            out = out * values[v] ** e
        return out

    def leading_coeff(self) -> int:
        """Coefficient of the largest monomial in tuple order."""
        if not self.terms:
            return 0
        return self.terms[max(self.terms)]

    def rename(self, mapping: Mapping[int, int]) -> LaurentPoly:
        """Relabel variable ids along an injective mapping."""
        out: dict[Monomial, int] = {}
        for m, c in self.terms.items():
            nm = tuple(sorted((mapping.get(v, v), e) for v, e in m))
            if len({v for v, _ in nm}) != len(nm):
                raise ValueError("rename mapping is not injective on this polynomial")
            out[nm] = out.get(nm, 0) + c
        return LaurentPoly(out)

    # ------------------------------------------------------------------
    def to_obj(self) -> list:
        terms = sorted(self.terms.items())
        return [{"coeff": str(c), "exps": {str(v): e for v, e in m}} for m, c in terms]

    @staticmethod
    def from_obj(obj: Iterable[dict]) -> LaurentPoly:
        out: dict[Monomial, int] = {}
        for rec in obj:
            m = tuple(sorted((int(v), int(e)) for v, e in rec["exps"].items()))
            out[m] = out.get(m, 0) + int(rec["coeff"])
        return LaurentPoly(out)

    def __str__(self) -> str:
        return self.format()

    def format(self, names: Mapping[int, str] | None = None) -> str:
        if not self.terms:
            return "0"
        def name(v: int) -> str:
            return names[v] if names else f"X{v}"
        parts: list[str] = []
        for m, c in sorted(self.terms.items()):
            factors = [name(v) if e == 1 else f"{name(v)}^{e}" for v, e in m]
            body = "*".join(factors)
            if not body:
                text = str(abs(c))
            elif abs(c) == 1:
                text = body
            else:
                text = f"{abs(c)}*{body}"
            parts.append(("- " if c < 0 else "+ ") + text)
        out = " ".join(parts)
        return out[2:] if out.startswith("+ ") else ("-" + out[2:])

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"


class RatFunc:
    """A ratio of Laurent polynomials, normalized by monomial content,
    integer content, and a canonical denominator sign.  Equality is
    decided by cross-multiplication.

    >>> x = RatFunc.var(1)
    >>> (x / (x + RatFunc.one())) + (RatFunc.one() / (x + RatFunc.one())) == RatFunc.one()
    True
    """

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: LaurentPoly | None = None):
        if den is None:
            den = LaurentPoly.one()
        if den.is_zero():
            raise ZeroFunction("zero denominator")
        if num.is_zero():
            self.num = LaurentPoly.zero()
            self.den = LaurentPoly.one()
            return
        # shift so the denominator has min exponent 0 in every variable
        shift = {v: -e for v, e in den.min_exponents().items()}
        if shift:
            num = num.shift(shift)
            den = den.shift(shift)
        g = math.gcd(num.content(), den.content())
        if den.leading_coeff() < 0:
            g = -g
        if g != 1:
            num = LaurentPoly({m: c // g for m, c in num.terms.items()})
            den = LaurentPoly({m: c // g for m, c in den.terms.items()})
        self.num = num
        self.den = den

    # ------------------------------------------------------------------
    @staticmethod
    def zero() -> RatFunc:
        return RatFunc(LaurentPoly.zero())

    @staticmethod
    def one() -> RatFunc:
        return RatFunc(LaurentPoly.one())

    @staticmethod
    def const(c) -> RatFunc:
        if isinstance(c, RatFunc):
            return c
        if isinstance(c, Fraction):
            return RatFunc(LaurentPoly.const(c.numerator), LaurentPoly.const(c.denominator))
        return RatFunc(LaurentPoly.const(int(c)))

    @staticmethod
    def var(v: int, exp: int = 1) -> RatFunc:
        if exp >= 0:
            return RatFunc(LaurentPoly.var(v, exp))
        return RatFunc(LaurentPoly.one(), LaurentPoly.var(v, -exp))

    @staticmethod
    def from_poly(p: LaurentPoly) -> RatFunc:
        return RatFunc(p)

    # ------------------------------------------------------------------
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num == self.den

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatFunc):
            return NotImplemented
        if self.num is other.num and self.den is other.den:
            return True
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        raise TypeError("RatFunc is unhashable; compare with ==")

    def __add__(self, other: RatFunc) -> RatFunc:
        if self.num.is_zero():
            return other
        if other.num.is_zero():
            return self
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    def __neg__(self) -> RatFunc:
        return RatFunc(-self.num, self.den)

    def __sub__(self, other: RatFunc) -> RatFunc:
        return self + (-other)

    def __mul__(self, other: RatFunc) -> RatFunc:
        return RatFunc(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: RatFunc) -> RatFunc:
        if other.num.is_zero():
            raise ZeroFunction("division by the zero function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def inverse(self) -> RatFunc:
        if self.num.is_zero():
            raise ZeroFunction("inverse of the zero function")
        return RatFunc(self.den, self.num)

    def __pow__(self, e: int) -> RatFunc:
        if e < 0:
            return self.inverse() ** (-e)
        return RatFunc(self.num ** e, self.den ** e)

    def eval_fraction(self, values: Mapping[int, Fraction]) -> Fraction:
        den = self.den.eval_fraction(values)
        if den == 0:
            raise ZeroDivisionError("denominator vanishes at this point")
        return self.num.eval_fraction(values) / den

    def substitute(self, values: Mapping[int, "RatFunc"],
                   cache: dict | None = None) -> RatFunc:
        """Evaluate at RatFunc values (composition of rational maps)."""
        if cache is None:
            cache = {}
        den = self.den.eval_ratfunc(values, cache)
        if den.is_zero():
            raise ZeroFunction("denominator vanishes under substitution")
        return self.num.eval_ratfunc(values, cache) / den

    def rename(self, mapping: Mapping[int, int]) -> RatFunc:
        return RatFunc(self.num.rename(mapping), self.den.rename(mapping))

    # ------------------------------------------------------------------
    def to_obj(self) -> dict:
        return {"num": self.num.to_obj(), "den": self.den.to_obj()}

    @staticmethod
    def from_obj(obj: dict) -> RatFunc:
        return RatFunc(LaurentPoly.from_obj(obj["num"]), LaurentPoly.from_obj(obj["den"]))

    def format(self, names: Mapping[int, str] | None = None) -> str:
        if self.den.is_one():
            return self.num.format(names)
        return f"({self.num.format(names)}) / ({self.den.format(names)})"

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"RatFunc({self})"


_ZERO = RatFunc.zero()
_ONE = RatFunc.one()


class RFMatrix:
    """A square matrix over the rational-function field."""

    __slots__ = ("n", "rows", "_minors")

    def __init__(self, rows: Iterable[Iterable[RatFunc]]):
        self.rows: tuple[tuple[RatFunc, ...], ...] = tuple(tuple(r) for r in rows)
        self.n = len(self.rows)
        if any(len(r) != self.n for r in self.rows):
            raise ValueError("matrix must be square")
        self._minors: dict[tuple[tuple[int, ...], tuple[int, ...]], RatFunc] = {}

    # ------------------------------------------------------------------
    @staticmethod
    def identity(n: int) -> RFMatrix:
        return RFMatrix([[_ONE if i == j else _ZERO for j in range(n)] for i in range(n)])

    @staticmethod
    def diagonal(entries: Iterable[RatFunc]) -> RFMatrix:
        es = list(entries)
        n = len(es)
        return RFMatrix([[es[i] if i == j else _ZERO for j in range(n)] for i in range(n)])

    @staticmethod
    def from_ints(rows: Iterable[Iterable[int]]) -> RFMatrix:
        return RFMatrix([[RatFunc.const(c) for c in r] for r in rows])

    def entry(self, i: int, j: int) -> RatFunc:
        """1-based entry access."""
        return self.rows[i - 1][j - 1]

    def __eq__(self, other) -> bool:
        if not isinstance(other, RFMatrix) or self.n != other.n:
            return False
        return all(a == b for ra, rb in zip(self.rows, other.rows) for a, b in zip(ra, rb))

    def __matmul__(self, other: RFMatrix) -> RFMatrix:
        if self.n != other.n:
            raise ValueError("size mismatch")
        n = self.n
        cols = list(zip(*other.rows))
        out = []
        for r in self.rows:
            row = []
            for c in cols:
                acc = _ZERO
                for a, b in zip(r, c):
                    if a.is_zero() or b.is_zero():
                        continue
                    acc = acc + a * b
                row.append(acc)
            out.append(row)
        return RFMatrix(out)

    def transpose(self) -> RFMatrix:
        return RFMatrix(zip(*self.rows))

    def map(self, f) -> RFMatrix:
        return RFMatrix([[f(x) for x in r] for r in self.rows])

    # ------------------------------------------------------------------
    def minor(self, I: Iterable[int], J: Iterable[int]) -> RatFunc:
        """Determinant of the (I, J) submatrix, rows and columns taken in
        ascending index order.  The empty minor is 1; unequal sizes give 0.
        """
        It = tuple(sorted(set(I)))
        Jt = tuple(sorted(set(J)))
        if any(not 1 <= i <= self.n for i in It) or any(not 1 <= j <= self.n for j in Jt):
            raise IndexOutOfRange(f"indices out of 1..{self.n}: {It}, {Jt}")
        if len(It) != len(Jt):
            return _ZERO
        return self._minor(It, Jt)

    def _minor(self, I: tuple[int, ...], J: tuple[int, ...]) -> RatFunc:
        if not I:
            return _ONE
        key = (I, J)
        cached = self._minors.get(key)
        if cached is not None:
            return cached
        i0 = I[0]
        rest = I[1:]
        acc = _ZERO
        for t, j in enumerate(J):
            a = self.rows[i0 - 1][j - 1]
            if a.is_zero():
                continue
            sub = self._minor(rest, J[:t] + J[t + 1:])
            if sub.is_zero():
                continue
            term = a * sub
            acc = acc + term if t % 2 == 0 else acc - term
        self._minors[key] = acc
        return acc

    def det(self) -> RatFunc:
        full = tuple(range(1, self.n + 1))
        return self._minor(full, full)

    def inverse(self) -> RFMatrix:
        d = self.det()
        if d.is_zero():
            raise SingularMatrix("matrix determinant is zero")
        n = self.n
        full = list(range(1, n + 1))
        out = [[_ZERO] * n for _ in range(n)]
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                I = tuple(k for k in full if k != j)
                J = tuple(k for k in full if k != i)
                cof = self._minor(I, J)
                if (i + j) % 2:
                    cof = -cof
                out[i - 1][j - 1] = cof / d
        return RFMatrix(out)

    def is_invertible(self) -> bool:
        return not self.det().is_zero()

    def to_obj(self) -> list:
        return [[x.to_obj() for x in r] for r in self.rows]

    def format(self, names: Mapping[int, str] | None = None) -> str:
        return "\n".join("[" + ", ".join(x.format(names) for x in r) + "]" for r in self.rows)

    def __repr__(self) -> str:
        return f"RFMatrix of size {self.n}:\n{self.format()}"


def minor(m: RFMatrix, I: Iterable[int], J: Iterable[int]) -> RatFunc:
    return m.minor(I, J)


# ----------------------------------------------------------------------
# Group generators and Weyl lifts


def generator(kind: str, i: int, n: int, X: RatFunc | None = None) -> RFMatrix:
    """The elementary factors: e_plus(i) = I + E_{i,i+1},
    e_minus(i) = I + E_{i+1,i}, and h(i, X) = diag(X,...,X,1,...,1) with
    X in the first i slots.  h(0, X) is the identity; h(n, X) scales all
    n rows.
    """
    if kind in ("e_plus", "e_minus"):
        if not 1 <= i <= n - 1:
            raise IndexOutOfRange(f"{kind}({i}) needs 1 <= i <= {n - 1}")
        rows = [[_ONE if a == b else _ZERO for b in range(n)] for a in range(n)]
        if kind == "e_plus":
            rows[i - 1][i] = _ONE
        else:
            rows[i][i - 1] = _ONE
        return RFMatrix(rows)
    if kind == "h":
        if not 0 <= i <= n:
            raise IndexOutOfRange(f"h({i}) needs 0 <= i <= {n}")
        if X is None or X.is_zero():
            raise ZeroFunction(f"h({i}) needs a nonzero scalar")
        return RFMatrix.diagonal([X if k < i else _ONE for k in range(n)])
    raise IndexOutOfRange(f"unknown generator kind {kind!r}")


def simple_lift(i: int, n: int) -> RFMatrix:
    """The lift of the simple reflection s_i: the 2x2 block
    [[0, -1], [1, 0]] at rows/columns (i, i+1)."""
    if not 1 <= i <= n - 1:
        raise IndexOutOfRange(f"simple_lift({i}) needs 1 <= i <= {n - 1}")
    rows = [[_ONE if a == b else _ZERO for b in range(n)] for a in range(n)]
    rows[i - 1][i - 1] = _ZERO
    rows[i][i] = _ZERO
    rows[i - 1][i] = -_ONE
    rows[i][i - 1] = _ONE
    return RFMatrix(rows)


def lift_weyl(w: weyl.Permutation) -> RFMatrix:
    """The canonical lift of a Weyl element: the product of simple lifts
    along any reduced word (the result is word-independent)."""
    out = RFMatrix.identity(w.n)
    for i in weyl.greedy_word(w):
        out = out @ simple_lift(i, w.n)
    return out


def star(g: RFMatrix) -> RFMatrix:
    """The involutive automorphism w0bar (g^-1)^t w0bar^-1; it preserves
    the upper and lower triangular subgroups."""
    w0 = lift_weyl(weyl.Permutation.longest(g.n))
    return w0 @ g.inverse().transpose() @ w0.inverse()


# ----------------------------------------------------------------------
# Gaussian decomposition


def gauss_decompose(x: RFMatrix) -> tuple[RFMatrix, RFMatrix, RFMatrix]:
    """Factor x = L * D * U with L unipotent lower, D diagonal, U unipotent
    upper.  Requires all leading principal minors nonzero; raises
    NotGaussianDecomposable naming the first vanishing order otherwise.
    """
    n = x.n
    leading = [x.minor(range(1, k + 1), range(1, k + 1)) for k in range(n + 1)]
    for k in range(1, n + 1):
        if leading[k].is_zero():
            raise NotGaussianDecomposable(k)
    L = [[_ONE if a == b else _ZERO for b in range(n)] for a in range(n)]
    U = [[_ONE if a == b else _ZERO for b in range(n)] for a in range(n)]
    for k in range(1, n + 1):
        Ik = list(range(1, k + 1))
        Ikm = list(range(1, k))
        for i in range(k + 1, n + 1):
            L[i - 1][k - 1] = x.minor(Ikm + [i], Ik) / leading[k]
        for j in range(k + 1, n + 1):
            U[k - 1][j - 1] = x.minor(Ik, Ikm + [j]) / leading[k]
    D = RFMatrix.diagonal([leading[k] / leading[k - 1] for k in range(1, n + 1)])
    return RFMatrix(L), D, RFMatrix(U)


# ----------------------------------------------------------------------
# Tropical points and evaluation


@dataclass(frozen=True)
class TropicalPoint:
    """An integer cocharacter: one integer coordinate per variable id."""

    coords: tuple[tuple[int, int], ...]

    @staticmethod
    def of(values: Mapping[int, int]) -> TropicalPoint:
        return TropicalPoint(tuple(sorted((v, c) for v, c in values.items() if c)))

    @staticmethod
    def basic(var: int, sign: int = 1) -> TropicalPoint:
        return TropicalPoint.of({var: sign})

    def coord(self, var: int) -> int:
        for v, c in self.coords:
            if v == var:
                return c
        return 0

    def as_dict(self) -> dict[int, int]:
        return dict(self.coords)


def _trop_poly(p: LaurentPoly, point: TropicalPoint) -> int:
    coords = point.as_dict()
    return max(sum(e * coords.get(v, 0) for v, e in m) for m in p.terms)


def trop_eval(f: RatFunc, point: TropicalPoint) -> int:
    """Max-plus evaluation: max over numerator monomials of the pairing
    with the point, minus the same for the denominator."""
    if f.is_zero():
        raise ZeroFunction("tropical evaluation of the zero function")
    return _trop_poly(f.num, point) - _trop_poly(f.den, point)


def top_degree(f: RatFunc, var: int) -> int:
    """Degree in one variable: max exponent over the numerator minus max
    exponent over the denominator.  Representation independent."""
    if f.is_zero():
        raise ZeroFunction("degree of the zero function")
    return f.num.degree(var) - f.den.degree(var)
