"""Exact Grothendieck-Witt ring models over four base-field classes.

Elements are virtual differences of diagonal forms, kept in a normal
form where no square-class token appears on both sides.  Square-class
tokens are 1 over an algebraically closed field, +-1 over a real closed
field, 1 and "u" (a fixed non-square) over an odd finite field, and
square-free nonzero integers over the rationals.

Over a real closed field the model is Z[eps]/(eps^2 - 1) with
eps = <-1>; equality there coincides with equality of (rank, signature)
pairs, and the units are exactly +-1 and +-eps.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .errors import FieldMismatch, ParityViolation

ALG_CLOSED = "alg-closed"
REAL_CLOSED = "real-closed"
FINITE_ODD = "finite-odd"
RATIONAL = "rational"

NONSQUARE = "u"


def _prime_power(q: int):
    """Return (p, k) with q = p**k, or None if q is not a prime power."""
    if q < 2:
        return None
    for p in range(2, q + 1):
        if p * p > q:
            return (q, 1)
        if q % p == 0:
            k = 0
            m = q
            while m % p == 0:
                m //= p
                k += 1
            return (p, k) if m == 1 else None
    return None


def _squarefree(a: int) -> int:
    """Square-free part of a nonzero integer, sign preserved."""
    sign = -1 if a < 0 else 1
    a = abs(a)
    out = 1
    d = 2
    while d * d <= a:
        if a % d == 0:
            e = 0
            while a % d == 0:
                a //= d
                e += 1
            if e % 2:
                out *= d
        d += 1 if d == 2 else 2
    return sign * out * a


@dataclass(frozen=True)
class FieldDescriptor:
    """Base-field class: alg-closed, real-closed, finite-odd, or rational."""

    kind: str
    char: int = 0
    q: int | None = None

    def __post_init__(self):
        if self.kind == ALG_CLOSED:
            if self.char < 0 or self.char == 1:
                raise ValueError(f"invalid characteristic {self.char}")
            if self.char > 1 and _prime_power(self.char) != (self.char, 1):
                raise ValueError(f"characteristic {self.char} is not prime")
        elif self.kind == FINITE_ODD:
            if self.q is None:
                raise ValueError("finite-odd needs q")
            pk = _prime_power(self.q)
            if pk is None or pk[0] == 2:
                raise ValueError(f"q = {self.q} is not an odd prime power")
            object.__setattr__(self, "char", pk[0])
        elif self.kind in (REAL_CLOSED, RATIONAL):
            if self.char != 0:
                raise ValueError(f"{self.kind} has characteristic 0")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @classmethod
    def alg_closed(cls, char: int = 0) -> "FieldDescriptor":
        return cls(kind=ALG_CLOSED, char=char)

    @classmethod
    def real_closed(cls) -> "FieldDescriptor":
        return cls(kind=REAL_CLOSED)

    @classmethod
    def finite_odd(cls, q: int) -> "FieldDescriptor":
        return cls(kind=FINITE_ODD, q=q)

    @classmethod
    def rational(cls) -> "FieldDescriptor":
        return cls(kind=RATIONAL)

    @property
    def is_formally_real(self) -> bool:
        return self.kind in (REAL_CLOSED, RATIONAL)

    def normalize_token(self, token):
        """Canonical square-class token for an integer or symbolic input."""
        if self.kind == FINITE_ODD and token == NONSQUARE:
            return NONSQUARE
        if not isinstance(token, int):
            raise ValueError(f"square-class token {token!r} not understood")
        if token == 0:
            raise ValueError("square-class token must be nonzero")
        if self.kind == ALG_CLOSED:
            return 1
        if self.kind == REAL_CLOSED:
            return 1 if token > 0 else -1
        if self.kind == RATIONAL:
            return _squarefree(token)
        # finite-odd: squareness in F_q for a prime-field representative
        p = self.char
        if token % p == 0:
            raise ValueError(f"token {token} is zero in characteristic {p}")
        return 1 if pow(token % p, (self.q - 1) // 2, p) == 1 else NONSQUARE

    def multiply_tokens(self, s, t):
        if self.kind == ALG_CLOSED:
            return 1
        if self.kind == REAL_CLOSED:
            return s * t
        if self.kind == FINITE_ODD:
            return 1 if s == t else NONSQUARE
        return _squarefree(s * t)

    def as_dict(self) -> dict:
        out = {"kind": self.kind}
        if self.kind == ALG_CLOSED:
            out["char"] = self.char
        if self.kind == FINITE_ODD:
            out["q"] = self.q
        return out


def _token_sort_key(token):
    return (isinstance(token, str), token if isinstance(token, int) else 0, str(token))


class GWElement:
    """Virtual quadratic form <pos tokens> - <neg tokens> in normal form."""

    __slots__ = ("field", "pos", "neg")

    def __init__(self, field: FieldDescriptor, pos=(), neg=()):
        self.field = field
        p = Counter()
        for t in pos:
            p[field.normalize_token(t)] += 1
        n = Counter()
        for t in neg:
            n[field.normalize_token(t)] += 1
        for token in set(p) | set(n):
            common = min(p[token], n[token])
            if common:
                p[token] -= common
                n[token] -= common
        self.pos = Counter({t: c for t, c in p.items() if c})
        self.neg = Counter({t: c for t, c in n.items() if c})

    @classmethod
    def form(cls, field: FieldDescriptor, *tokens) -> "GWElement":
        return cls(field, pos=tokens)

    @classmethod
    def zero(cls, field: FieldDescriptor) -> "GWElement":
        return cls(field)

    @classmethod
    def one(cls, field: FieldDescriptor) -> "GWElement":
        return cls(field, pos=(1,))

    @property
    def rank(self) -> int:
        return sum(self.pos.values()) - sum(self.neg.values())

    def _expanded(self, counter: Counter) -> list:
        out = []
        for token in sorted(counter, key=_token_sort_key):
            out.extend([token] * counter[token])
        return out

    def _canonical_key(self):
        inv = invariants(self)
        if self.field.kind == ALG_CLOSED:
            return (self.field, inv.rank)
        if self.field.kind == REAL_CLOSED:
            return (self.field, inv.rank, inv.signatures)
        if self.field.kind == FINITE_ODD:
            return (self.field, inv.rank, str(inv.discriminant))
        # rationals: representation equality; deciding true GW(Q) equality
        # would need local invariants that stay out of scope
        return (self.field, tuple(self._expanded(self.pos)), tuple(self._expanded(self.neg)))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GWElement):
            return NotImplemented
        if self.field != other.field:
            return False
        return self._canonical_key() == other._canonical_key()

    def __hash__(self) -> int:
        return hash(self._canonical_key())

    def __repr__(self) -> str:
        def fmt(counter):
            toks = self._expanded(counter)
            return "<" + ",".join(str(t) for t in toks) + ">" if toks else ""

        p, n = fmt(self.pos), fmt(self.neg)
        if not p and not n:
            return "GW(0)"
        return "GW(" + (p or "0") + (f" - {n}" if n else "") + ")"

    def _check_field(self, other: "GWElement"):
        if self.field != other.field:
            raise FieldMismatch(f"{self.field.kind} vs {other.field.kind}")

    def __add__(self, other: "GWElement") -> "GWElement":
        if not isinstance(other, GWElement):
            return NotImplemented
        self._check_field(other)
        return GWElement(
            self.field,
            pos=self._expanded(self.pos) + other._expanded(other.pos),
            neg=self._expanded(self.neg) + other._expanded(other.neg),
        )

    def __neg__(self) -> "GWElement":
        return GWElement(self.field, pos=self._expanded(self.neg), neg=self._expanded(self.pos))

    def __sub__(self, other: "GWElement") -> "GWElement":
        if not isinstance(other, GWElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            reps = self._expanded(self.pos) * abs(other)
            regs = self._expanded(self.neg) * abs(other)
            if other >= 0:
                return GWElement(self.field, pos=reps, neg=regs)
            return GWElement(self.field, pos=regs, neg=reps)
        if not isinstance(other, GWElement):
            return NotImplemented
        self._check_field(other)
        mul = self.field.multiply_tokens
        pos: list = []
        neg: list = []
        for s, cs in self.pos.items():
            for t, ct in other.pos.items():
                pos.extend([mul(s, t)] * (cs * ct))
            for t, ct in other.neg.items():
                neg.extend([mul(s, t)] * (cs * ct))
        for s, cs in self.neg.items():
            for t, ct in other.pos.items():
                neg.extend([mul(s, t)] * (cs * ct))
            for t, ct in other.neg.items():
                pos.extend([mul(s, t)] * (cs * ct))
        return GWElement(self.field, pos=pos, neg=neg)

    __rmul__ = __mul__

    def as_dict(self) -> dict:
        return {
            "field": self.field.as_dict(),
            "pos": self._expanded(self.pos),
            "neg": self._expanded(self.neg),
        }


def gw_add(a: GWElement, b: GWElement) -> GWElement:
    return a + b


def gw_mul(a: GWElement, b: GWElement) -> GWElement:
    return a * b


def gw_neg(a: GWElement) -> GWElement:
    return -a


@dataclass(frozen=True)
class GWInvariants:
    """Rank, per-ordering signatures, and plain discriminant."""

    rank: int
    signatures: tuple[int, ...]
    discriminant: object

    def as_dict(self) -> dict:
        return {
            "rank": self.rank,
            "signatures": list(self.signatures),
            "disc": self.discriminant,
        }


def _archimedean_sign(token) -> int:
    return 1 if token > 0 else -1


def invariants(a: GWElement) -> GWInvariants:
    """Classical invariants; signature of a virtual element is linear."""
    rank = a.rank
    if a.field.is_formally_real:
        sgn = sum(_archimedean_sign(t) * c for t, c in a.pos.items())
        sgn -= sum(_archimedean_sign(t) * c for t, c in a.neg.items())
        signatures: tuple[int, ...] = (sgn,)
    else:
        signatures = ()
    disc = 1
    for t, c in list(a.pos.items()) + list(a.neg.items()):
        if c % 2:
            disc = a.field.multiply_tokens(disc, t)
    return GWInvariants(rank=rank, signatures=signatures, discriminant=disc)


@dataclass(frozen=True)
class UnitVerdict:
    """Invertibility verdict plus the criterion that justifies it."""

    unit: bool
    justification: str

    def __bool__(self) -> bool:
        return self.unit


def is_unit(a: GWElement) -> UnitVerdict:
    """Unit detection per field class.

    Non-formally-real fields only need rank = +-1 (the rank kernel is
    the nil radical).  A real closed field needs rank and signature both
    +-1, matching the units +-1, +-eps of Z[eps]/(eps^2 - 1).  Over the
    rationals the same pair suffices: the single real closure plus the
    rank criterion detect invertibility.
    """
    inv = invariants(a)
    rank_ok = inv.rank in (1, -1)
    if not a.field.is_formally_real:
        return UnitVerdict(unit=rank_ok, justification="rankunit")
    sgn_ok = all(s in (1, -1) for s in inv.signatures)
    if a.field.kind == REAL_CLOSED:
        return UnitVerdict(unit=rank_ok and sgn_ok, justification="real-closed exact")
    return UnitVerdict(unit=rank_ok and sgn_ok, justification="formallyrealEuler")


def from_rank_sgn(field: FieldDescriptor, rank: int, sgn: int) -> GWElement:
    """Element a*<1> + b*<-1> with the given rank and signature.

    Only meaningful over a formally real field class; multiplicities may
    come out negative, yielding a virtual element.
    """
    if not field.is_formally_real:
        raise ValueError(f"{field.kind} carries no signature")
    if (rank - sgn) % 2:
        raise ParityViolation(f"rank {rank} and signature {sgn} differ in parity")
    a = (rank + sgn) // 2
    b = (rank - sgn) // 2
    out = GWElement.one(field) * a
    return out + GWElement.form(field, -1) * b


# ---------------------------------------------------------------------------
# small expression language for the CLI:  <1,-1> * <2> + 3 - <6>


class _ExprParser:
    def __init__(self, field: FieldDescriptor, text: str):
        self.field = field
        self.text = text
        self.pos = 0

    def error(self, msg: str):
        return ValueError(f"bad form expression at offset {self.pos}: {msg}")

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch: str):
        if self.peek() != ch:
            raise self.error(f"expected {ch!r}")
        self.pos += 1

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        if self.peek() == "-":
            self.pos += 1
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start or self.text[start:self.pos] == "-":
            raise self.error("expected an integer")
        return int(self.text[start:self.pos])

    def token(self):
        if self.peek() == NONSQUARE:
            self.pos += 1
            return NONSQUARE
        return self.integer()

    def form(self) -> GWElement:
        self.take("<")
        tokens = [self.token()]
        while self.peek() == ",":
            self.take(",")
            tokens.append(self.token())
        self.take(">")
        return GWElement.form(self.field, *tokens)

    def factor(self) -> GWElement:
        ch = self.peek()
        if ch == "<":
            return self.form()
        if ch == "(":
            self.take("(")
            value = self.expr()
            self.take(")")
            return value
        if ch == "-":
            self.take("-")
            return -self.factor()
        return self.integer() * GWElement.one(self.field)

    def term(self) -> GWElement:
        value = self.factor()
        while self.peek() == "*":
            self.take("*")
            value = value * self.factor()
        return value

    def expr(self) -> GWElement:
        value = self.term()
        while self.peek() in ("+", "-"):
            if self.peek() == "+":
                self.take("+")
                value = value + self.term()
            else:
                self.take("-")
                value = value - self.term()
        return value

    def parse(self) -> GWElement:
        value = self.expr()
        self.skip_ws()
        if self.pos != len(self.text):
            raise self.error("trailing input")
        return value


def parse_form_expression(field: FieldDescriptor, text: str) -> GWElement:
    """Evaluate a diagonal-form expression like '<1,-1>*<2> + 3 - <6>'."""
    return _ExprParser(field, text).parse()
