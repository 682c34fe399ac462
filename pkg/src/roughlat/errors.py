"""Exception hierarchy. Every error carries the concrete witness that triggered it."""


class LGCError(Exception):
    """Base class for all toolkit errors."""


class CarrierTooLarge(LGCError):
    def __init__(self, size, bound):
        super().__init__(f"carrier of size {size} exceeds enumeration bound {bound}")
        self.size = size
        self.bound = bound


class UnknownElement(LGCError):
    def __init__(self, element):
        super().__init__(f"unknown element {element!r}")
        self.element = element


# order_core

class NotReflexive(LGCError):
    def __init__(self, x):
        super().__init__(f"relation is not reflexive at {x!r}")
        self.x = x


class NotTransitive(LGCError):
    def __init__(self, x, y, z):
        super().__init__(f"relation is not transitive: {x!r} <= {y!r} <= {z!r} but not {x!r} <= {z!r}")
        self.x, self.y, self.z = x, y, z


class NotUpClosed(LGCError):
    def __init__(self, subset, x, y):
        super().__init__(f"set {sorted(subset)!r} is not up-closed: contains {x!r} but not {y!r}")
        self.subset = subset
        self.x, self.y = x, y


# lattice_core

class NotAPartialOrder(LGCError):
    pass


class NoLUB(LGCError):
    def __init__(self, x, y):
        super().__init__(f"no least upper bound for ({x!r}, {y!r})")
        self.x, self.y = x, y


class NoGLB(LGCError):
    def __init__(self, x, y):
        super().__init__(f"no greatest lower bound for ({x!r}, {y!r})")
        self.x, self.y = x, y


class NoBounds(LGCError):
    pass


class NotDistributive(LGCError):
    def __init__(self, x=None, y=None, z=None):
        msg = "lattice is not distributive"
        if x is not None:
            msg += f": {x!r} & ({y!r} | {z!r}) differs from ({x!r} & {y!r}) | ({x!r} & {z!r})"
        super().__init__(msg)
        self.x, self.y, self.z = x, y, z


class NoRelativePseudocomplement(LGCError):
    def __init__(self, a, b):
        super().__init__(f"{a!r} -> {b!r} does not exist")
        self.a, self.b = a, b


class NoCoimplication(LGCError):
    def __init__(self, a, b):
        super().__init__(f"{a!r} <- {b!r} does not exist")
        self.a, self.b = a, b


# galois_core

class AdjunctionFails(LGCError):
    """``direction`` is "⇒" when ``p <= g(q)`` holds but ``f(p) <= q`` fails, "⇐" otherwise."""

    def __init__(self, p, q, direction):
        super().__init__(f"adjunction fails at p={p!r}, q={q!r} ({direction})")
        self.p, self.q, self.direction = p, q, direction


class UnitFails(LGCError):
    def __init__(self, p):
        super().__init__(f"p <= g(f(p)) fails at p={p!r}")
        self.p = p


class CounitFails(LGCError):
    def __init__(self, q):
        super().__init__(f"f(g(q)) <= q fails at q={q!r}")
        self.q = q


class NotMonotone(LGCError):
    def __init__(self, map_name, x, y):
        super().__init__(f"{map_name} is not monotone: {x!r} <= {y!r} but {map_name}({x!r}) > {map_name}({y!r})")
        self.map_name, self.x, self.y = map_name, x, y


class NotResiduated(LGCError):
    def __init__(self, witness=None):
        super().__init__(f"map has no right adjoint (witness {witness!r})")
        self.witness = witness


class NotCoResiduated(LGCError):
    def __init__(self, witness=None):
        super().__init__(f"map has no left adjoint (witness {witness!r})")
        self.witness = witness


# gc_frame

class CRViolation(LGCError):
    def __init__(self, x, x2, y, y2):
        super().__init__(
            f"(CR) fails: {x!r} <= {x2!r}, {x!r} R {y!r}, {y2!r} <= {y!r} but not {x2!r} R {y2!r}"
        )
        self.x, self.x2, self.y, self.y2 = x, x2, y, y2

    @property
    def witness(self):
        return (self.x, self.x2, self.y, self.y2)


class ClosureViolation(LGCError):
    def __init__(self, subset, operator):
        super().__init__(f"{operator} of {subset!r} is not an up-set")
        self.subset, self.operator = subset, operator


class BadSignature(LGCError):
    pass


# term_lang

class TermSyntaxError(LGCError):
    def __init__(self, position, expected, message=None):
        expected = tuple(sorted(expected))
        super().__init__(message or f"syntax error at {position}: expected one of {', '.join(expected)}")
        self.position = position
        self.expected = expected


class ReservedVariable(TermSyntaxError):
    def __init__(self, position, name):
        super().__init__(position, (), f"'{name}' at {position} is reserved and cannot be a variable")
        self.name = name


class MixedAssociativity(TermSyntaxError):
    def __init__(self, position):
        super().__init__(position, (), f"'->' and '<-' mixed without parentheses at {position}")


class UnboundVariable(LGCError):
    def __init__(self, name):
        super().__init__(f"variable {name!r} is not assigned")
        self.name = name


class UnsupportedOperation(LGCError):
    def __init__(self, op, signature):
        super().__init__(f"operation {op!r} is not available in signature {signature}")
        self.op, self.signature = op, signature


class AssignmentSpaceTooLarge(LGCError):
    def __init__(self, size, bound):
        super().__init__(f"{size} assignments exceed bound {bound}")
        self.size, self.bound = size, bound


# instance_gen_cli

class BadSpec(LGCError):
    pass


class UnknownSuite(LGCError):
    pass


class DocumentError(LGCError):
    pass
