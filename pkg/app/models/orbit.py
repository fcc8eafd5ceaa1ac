from math import gcd

from app.core.errors import PreconditionError

HILBERT = "hilbert"
KUMMER = "kummer"

_KIND_ALIASES = {
    "hilbert": HILBERT,
    "hilb": HILBERT,
    "kummer": KUMMER,
}


def normalize_kind(kind: str) -> str:
    try:
        return _KIND_ALIASES[str(kind).lower()]
    except KeyError:
        raise PreconditionError(f"unknown kind: {kind} (expected hilbert or kummer)")


def class_product(n: int, kind: str) -> int:
    """Value of a*b for the classes of the given kind: 1-n or -1-n."""
    return 1 - n if normalize_kind(kind) == HILBERT else -1 - n


def class_modulus(n: int, kind: str) -> int:
    """The divisibility of exceptional classes: 2n-2 or 2n+2."""
    return 2 * n - 2 if normalize_kind(kind) == HILBERT else 2 * n + 2


class OrbitClass:
    """Canonical unordered coprime pair {a, b}, a > 0 > b, a <= |b|."""

    def __init__(self, a: int, b: int, kind: str, n: int):
        self.a = int(a)
        self.b = int(b)
        self.kind = normalize_kind(kind)
        self.n = int(n)
        if not (0 < self.a <= -self.b):
            raise PreconditionError(f"non-canonical orbit class ({a}, {b})")
        if gcd(self.a, self.b) != 1:
            raise PreconditionError(f"orbit class ({a}, {b}) is not coprime")
        if self.a * self.b != class_product(self.n, self.kind):
            raise PreconditionError(
                f"orbit class ({a}, {b}) has product {self.a * self.b}, "
                f"expected {class_product(self.n, self.kind)}"
            )

    @classmethod
    def canonical(cls, a: int, b: int, kind: str, n: int) -> "OrbitClass":
        # O(H) acts by swap and by negation
        small, large = sorted((abs(a), abs(b)))
        return cls(small, -large, kind, n)

    @property
    def pair(self):
        return self.a, self.b

    def __eq__(self, other):
        return isinstance(other, OrbitClass) and (self.a, self.b, self.kind, self.n) == (
            other.a,
            other.b,
            other.kind,
            other.n,
        )

    def __hash__(self):
        return hash((self.a, self.b, self.kind, self.n))

    def __repr__(self):
        return f"OrbitClass(a={self.a}, b={self.b}, kind={self.kind}, n={self.n})"
