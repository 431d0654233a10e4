"""Core syntax trees for choreographies and their local expression language.

Everything downstream (parser, type checker, engines, projection) works on the
types defined here. All nodes are frozen dataclasses: values are immutable
after construction and safe to share between threads or stash in visited-sets.

Runtime values are plain Python payloads (int, float, bool, str, tuple); the
static side is carried by ValueType. Lists are represented as tuples so that
whole machine states stay hashable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Mapping, Optional, Union


# ============================================================
# VALUE TYPES AND VALUES
# ============================================================


@dataclass(frozen=True)
class ValueType:
    """A storable type: Int, Float, Bool, Str, or List(T).

    ``elem`` is set only for kind="list". ``elem=None`` on a list means
    "element type unknown" (the type of an empty list literal); it compares
    compatible with any element type via :func:`types_compatible`.
    """

    kind: str  # "int" | "float" | "bool" | "str" | "list"
    elem: Optional["ValueType"] = None

    def __str__(self) -> str:
        if self.kind == "list":
            return f"List({self.elem if self.elem is not None else '?'})"
        return self.kind.capitalize()


INT = ValueType("int")
FLOAT = ValueType("float")
BOOL = ValueType("bool")
STR = ValueType("str")


def list_of(elem: Optional[ValueType]) -> ValueType:
    return ValueType("list", elem)


def types_compatible(a: Optional[ValueType], b: Optional[ValueType]) -> bool:
    """Structural equality, with None acting as a wildcard element type."""
    if a is None or b is None:
        return True
    if a.kind != b.kind:
        return False
    if a.kind == "list":
        return types_compatible(a.elem, b.elem)
    return True


def bottom(t: ValueType):
    """Initial value of a freshly started process of type t (a typed zero)."""
    return {"int": 0, "float": 0.0, "bool": False, "str": "", "list": ()}[t.kind]


def value_type_of(v) -> ValueType:
    """Classify a runtime value. bool must be tested before int."""
    if isinstance(v, bool):
        return BOOL
    if isinstance(v, int):
        return INT
    if isinstance(v, float):
        return FLOAT
    if isinstance(v, str):
        return STR
    if isinstance(v, tuple):
        return list_of(value_type_of(v[0]) if v else None)
    raise TypeError(f"not a storable value: {v!r}")


def format_value(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, tuple):
        return "[" + ",".join(format_value(x) for x in v) + "]"
    if isinstance(v, str):
        return '"' + v.replace('"', '\\"') + '"'
    return repr(v)


# ============================================================
# EXPRESSIONS
#
# A send expression may mention * (the owner's value); a receive function
# may mention both * (the receiver's value) and $ (the received value).
# ============================================================


@dataclass(frozen=True)
class Expr:
    pass


@dataclass(frozen=True)
class Lit(Expr):
    value: object  # int | float | bool | str | tuple

    def __str__(self) -> str:
        return format_value(self.value)


@dataclass(frozen=True)
class Star(Expr):
    """The owner placeholder *."""

    def __str__(self) -> str:
        return "*"


@dataclass(frozen=True)
class Recvd(Expr):
    """The received-value placeholder $, legal only in receive functions."""

    def __str__(self) -> str:
        return "$"


@dataclass(frozen=True)
class BinOp(Expr):
    op: str  # + - * / < > = and or
    left: Expr
    right: Expr

    def __str__(self) -> str:
        return f"({self.left} {self.op} {self.right})"


@dataclass(frozen=True)
class Not(Expr):
    arg: Expr

    def __str__(self) -> str:
        return f"(not {self.arg})"


@dataclass(frozen=True)
class BuiltinCall(Expr):
    name: str
    args: tuple[Expr, ...]

    def __str__(self) -> str:
        return f"{self.name}({', '.join(map(str, self.args))})"


class EvalFault(Exception):
    """A local computation failed (division by zero, head of empty list)."""


def _need_nonempty(v, what):
    if not v:
        raise EvalFault(f"{what} of empty list")
    return v


def _merge_sorted(a, b):
    out = []
    i = j = 0
    while i < len(a) and j < len(b):
        if b[j] < a[i]:
            out.append(b[j])
            j += 1
        else:
            out.append(a[i])
            i += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return tuple(out)


# name -> (arity, implementation). All are total on well-typed inputs except
# where EvalFault is documented (too-short lists, like division by zero).
BUILTINS = {
    "head": (1, lambda l: _need_nonempty(l, "head")[0]),
    "tail": (1, lambda l: _need_nonempty(l, "tail")[1:]),
    "cons": (2, lambda x, l: (x,) + l),
    "append": (2, lambda a, b: a + b),
    "length": (1, lambda l: len(l)),
    "is_empty": (1, lambda l: len(l) == 0),
    "fst": (1, lambda l: _need_nonempty(l, "fst")[0]),
    "snd": (1, lambda l: l[1] if len(l) > 1 else _need_nonempty((), "snd")),
    "short": (1, lambda l: len(l) <= 1),
    "is_small": (1, lambda l: len(l) <= 1),
    "pop2": (1, lambda l: l[:1] + l[2:] if len(l) > 1 else _need_nonempty((), "pop2")),
    "add": (2, lambda l, x: l + (x,)),
    "split1": (1, lambda l: l[: (len(l) + 1) // 2]),
    "split2": (1, lambda l: l[(len(l) + 1) // 2 :]),
    "merge": (2, _merge_sorted),
    "fst_lt_snd": (1, lambda l: l[0] < l[1] if len(l) > 1 else _need_nonempty((), "fst_lt_snd")),
    "fst_gt_snd": (1, lambda l: l[0] > l[1] if len(l) > 1 else _need_nonempty((), "fst_gt_snd")),
    "is_zero": (1, lambda n: n == 0),
    "dec": (1, lambda n: n - 1),
}


def eval_expr(e: Expr, owner, received=None, _allow_recvd: bool = False):
    """Evaluate e with * bound to owner (and $ bound to received, if allowed).

    Pure and deterministic. Raises EvalFault for division by zero and for
    list destructors applied to too-short lists; any other failure indicates
    an ill-typed expression that should have been rejected upstream.
    """
    if isinstance(e, Lit):
        return e.value
    if isinstance(e, Star):
        return owner
    if isinstance(e, Recvd):
        if not _allow_recvd:
            raise EvalFault("$ used outside a receive function")
        return received
    if isinstance(e, Not):
        return not eval_expr(e.arg, owner, received, _allow_recvd)
    if isinstance(e, BinOp):
        a = eval_expr(e.left, owner, received, _allow_recvd)
        b = eval_expr(e.right, owner, received, _allow_recvd)
        op = e.op
        if op == "+":
            return a + b
        if op == "-":
            return a - b
        if op == "*":
            return a * b
        if op == "/":
            if b == 0:
                raise EvalFault("division by zero")
            if isinstance(a, int) and not isinstance(a, bool):
                q = abs(a) // abs(b)
                return q if (a >= 0) == (b >= 0) else -q
            return a / b
        if op == "<":
            return a < b
        if op == ">":
            return a > b
        if op == "=":
            return a == b
        if op == "and":
            return a and b
        if op == "or":
            return a or b
        raise EvalFault(f"unknown operator {op}")
    if isinstance(e, BuiltinCall):
        arity, fn = BUILTINS[e.name]
        args = [eval_expr(a, owner, received, _allow_recvd) for a in e.args]
        if len(args) != arity:
            raise EvalFault(f"{e.name} expects {arity} arguments")
        return fn(*args)
    raise EvalFault(f"cannot evaluate {e!r}")


def apply_recv(f: Expr, owner, received):
    """Apply a receive function: * is the receiver's value, $ the message."""
    return eval_expr(f, owner, received, _allow_recvd=True)


def mentions_recvd(e: Expr) -> bool:
    if isinstance(e, Recvd):
        return True
    if isinstance(e, BinOp):
        return mentions_recvd(e.left) or mentions_recvd(e.right)
    if isinstance(e, Not):
        return mentions_recvd(e.arg)
    if isinstance(e, BuiltinCall):
        return any(mentions_recvd(a) for a in e.args)
    return False


# ============================================================
# PROCESS-LIST ARGUMENTS
#
# Procedure-call arguments are either a process name or a process-list
# expression: a literal list of names, a formal list parameter, or one of
# the combinators hd/tl/fst/rest/minor applied to such an expression.
# fst/rest/minor read the list as an n x (n+1) matrix; n is recovered from
# the length.
# ============================================================


@dataclass(frozen=True)
class ProcList:
    pass


@dataclass(frozen=True)
class PlNames(ProcList):
    names: tuple[str, ...]

    def __str__(self) -> str:
        return "[" + ",".join(self.names) + "]"


@dataclass(frozen=True)
class PlRef(ProcList):
    """Reference to a formal list parameter."""

    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class PlOp(ProcList):
    op: str  # hd | tl | fst | rest | minor
    arg: ProcList

    def __str__(self) -> str:
        return f"{self.op}({self.arg})"


Arg = Union[str, ProcList]


class InstantiationFault(Exception):
    """hd/tl applied to an empty concrete process list, or a bad matrix size."""


def _matrix_n(k: int) -> int:
    # k = n * (n + 1)
    n = int((-1 + (1 + 4 * k) ** 0.5) / 2 + 0.5)
    if n * (n + 1) != k:
        raise InstantiationFault(f"process list of length {k} is not an n x (n+1) matrix")
    return n


def eval_proclist(pl: ProcList, env: Mapping[str, tuple[str, ...]]) -> tuple[str, ...]:
    """Evaluate a process-list expression against concrete bindings."""
    if isinstance(pl, PlNames):
        return pl.names
    if isinstance(pl, PlRef):
        v = env[pl.name]
        if isinstance(v, str):
            raise InstantiationFault(f"{pl.name} bound to a single process, not a list")
        return v
    if isinstance(pl, PlOp):
        xs = eval_proclist(pl.arg, env)
        if pl.op == "hd":
            if not xs:
                raise InstantiationFault("hd of empty process list")
            return (xs[0],)
        if pl.op == "tl":
            if not xs:
                raise InstantiationFault("tl of empty process list")
            return xs[1:]
        n = _matrix_n(len(xs))
        if pl.op == "fst":
            return xs[: n + 1]
        if pl.op == "rest":
            return xs[n + 1 :]
        if pl.op == "minor":
            rows = [xs[i * (n + 1) : (i + 1) * (n + 1)] for i in range(1, n)]
            return tuple(x for row in rows for x in row[1:])
        raise InstantiationFault(f"unknown combinator {pl.op}")
    raise InstantiationFault(f"not a process list: {pl!r}")


def proclist_base(pl: ProcList) -> Optional[str]:
    """The underlying formal name of a combinator chain, if any."""
    while isinstance(pl, PlOp):
        pl = pl.arg
    return pl.name if isinstance(pl, PlRef) else None


def proclist_names(pl: ProcList) -> set[str]:
    """Free process names mentioned by a list expression (formals included)."""
    if isinstance(pl, PlNames):
        return set(pl.names)
    if isinstance(pl, PlRef):
        return {pl.name}
    return proclist_names(pl.arg)


# ============================================================
# INSTRUCTIONS
# ============================================================


@dataclass(frozen=True)
class Tag:
    """Fresh identifier pairing an asynchronous send half with its receive."""

    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Instruction:
    # source span (line, col); excluded from equality and hashing
    span: Optional[tuple[int, int]] = field(default=None, compare=False, kw_only=True)


@dataclass(frozen=True)
class Com(Instruction):
    """p.e -> q.f : p sends e (over its value) to q, which folds it in with f."""

    src: str
    expr: Expr
    dst: str
    fn: Expr


@dataclass(frozen=True)
class Sel(Instruction):
    """p -> q[l] : p selects branch label l at q."""

    src: str
    dst: str
    label: str


@dataclass(frozen=True)
class Tell(Instruction):
    """p: q <-> r : p introduces q and r to each other."""

    introducer: str
    left: str
    right: str


@dataclass(frozen=True)
class Start(Instruction):
    """p start q:T : p spawns a fresh process bound to q in the continuation."""

    parent: str
    child: str
    child_type: ValueType


@dataclass(frozen=True)
class Cond(Instruction):
    proc: str
    guard: Expr
    then_body: "Choreography"
    else_body: "Choreography"


@dataclass(frozen=True)
class Call(Instruction):
    name: str
    args: tuple[Arg, ...]
    fills: tuple[tuple[str, "Choreography"], ...] = ()  # sorted by hole name


@dataclass(frozen=True)
class Hole(Instruction):
    name: str


# ---- runtime half-terms (asynchronous execution only; never parsed) ----


@dataclass(frozen=True)
class ComSend(Instruction):
    src: str
    expr: Expr
    dst: str
    tag: Tag


@dataclass(frozen=True)
class ComRecv(Instruction):
    src: str
    dst: str
    fn: Expr
    payload: object  # Tag until the send fires, then the sent value


@dataclass(frozen=True)
class SelSend(Instruction):
    src: str
    dst: str
    label: str
    tag: Tag


@dataclass(frozen=True)
class SelRecv(Instruction):
    src: str
    dst: str
    label: str
    payload: object  # Tag | label


@dataclass(frozen=True)
class TellSend(Instruction):
    introducer: str
    left: str
    right: str
    tag_left: Tag
    tag_right: Tag


@dataclass(frozen=True)
class TellRecv(Instruction):
    introducer: str
    name: str  # the process name being received
    receiver: str
    payload: object  # Tag | name (instantiated when == name)


RUNTIME_TERMS = (ComSend, ComRecv, SelSend, SelRecv, TellSend, TellRecv)


def is_runtime(i: Instruction) -> bool:
    return isinstance(i, RUNTIME_TERMS)


def is_instantiated(i: Instruction) -> bool:
    """True for a receive half whose payload has arrived."""
    if isinstance(i, (ComRecv, SelRecv, TellRecv)):
        return not isinstance(i.payload, Tag)
    return False


# ============================================================
# CHOREOGRAPHIES
# ============================================================


@dataclass(frozen=True)
class Choreography:
    pass


@dataclass(frozen=True)
class Done(Choreography):
    """Terminated choreography (0)."""


@dataclass(frozen=True)
class Seq(Choreography):
    instr: Instruction
    cont: Choreography


@dataclass(frozen=True)
class DoneSeq(Choreography):
    """The runtime term 0;C, erased by structural precongruence."""

    cont: Choreography


DONE = Done()


def chor(*instrs: Instruction, tail: Choreography = DONE) -> Choreography:
    """Build a choreography from a flat instruction sequence."""
    out = tail
    for i in reversed(instrs):
        out = Seq(i, out)
    return out


def spine(c: Choreography) -> list[Instruction]:
    """Top-level instruction list, DoneSeq markers skipped."""
    out = []
    while not isinstance(c, Done):
        if isinstance(c, DoneSeq):
            c = c.cont
        else:
            out.append(c.instr)
            c = c.cont
    return out


def seq_compose(a: Choreography, b: Choreography) -> Choreography:
    """Sequential composition: push b under a's final continuation."""
    if isinstance(a, Done):
        return DoneSeq(b)
    if isinstance(a, DoneSeq):
        return DoneSeq(seq_compose(a.cont, b))
    return Seq(a.instr, seq_compose(a.cont, b))


def normalize_chor(c: Choreography) -> Choreography:
    """Erase DoneSeq nodes (0;C = C). Idempotent; does not unfold calls."""
    items = spine(c)
    out: Choreography = DONE
    for i in reversed(items):
        out = Seq(i, out)
    return out


def is_terminated(c: Choreography) -> bool:
    return not spine(c)


# ============================================================
# PROCESS NAMES
# ============================================================


def _pn_instr(i: Instruction) -> set[str]:
    if isinstance(i, Com):
        return {i.src, i.dst}
    if isinstance(i, Sel):
        return {i.src, i.dst}
    if isinstance(i, Tell):
        return {i.introducer, i.left, i.right}
    if isinstance(i, Start):
        return {i.parent}
    if isinstance(i, Cond):
        return {i.proc} | process_names(i.then_body) | process_names(i.else_body)
    if isinstance(i, Call):
        out: set[str] = set()
        for a in i.args:
            out |= {a} if isinstance(a, str) else proclist_names(a)
        for _, fill in i.fills:
            out |= process_names(fill)
        return out
    if isinstance(i, Hole):
        return set()
    # half-terms: the acting process only; tags and annotations are ignored
    if isinstance(i, (ComSend, SelSend, TellSend)):
        return {i.src if not isinstance(i, TellSend) else i.introducer}
    if isinstance(i, (ComRecv, SelRecv)):
        return {i.dst}
    if isinstance(i, TellRecv):
        return {i.receiver}
    raise TypeError(f"unknown instruction {i!r}")


def process_names(x) -> set[str]:
    """Free process names of an instruction or choreography.

    Start children are bound and excluded (a start contributes its parent
    only); for receive halves only the acting process counts, matching how
    independence of instructions is judged when commuting them.
    """
    if isinstance(x, Instruction):
        return _pn_instr(x)
    free: set[str] = set()
    for i in reversed(spine(x)):
        if isinstance(i, Start):
            free.discard(i.child)
            free.add(i.parent)
        else:
            free |= _pn_instr(i)
    return free


def bound_names(c: Choreography) -> set[str]:
    out: set[str] = set()
    for i in spine(c):
        if isinstance(i, Start):
            out.add(i.child)
        elif isinstance(i, Cond):
            out |= bound_names(i.then_body) | bound_names(i.else_body)
        elif isinstance(i, Call):
            for _, fill in i.fills:
                out |= bound_names(fill)
    return out


# ============================================================
# SUBSTITUTION AND FRESH NAMES
# ============================================================


def fresh_name(base: str, used) -> str:
    """Deterministic fresh name: smallest k with base#k unused."""
    k = 1
    while f"{base}#{k}" in used:
        k += 1
    return f"{base}#{k}"


def _strip_suffix(name: str) -> str:
    return name.split("#", 1)[0]


def _subst_expr_free(e: Expr) -> Expr:
    return e  # expressions contain no process names


def _map_name(n: str, m: Mapping[str, object]) -> str:
    v = m.get(n, n)
    if isinstance(v, tuple):
        if len(v) == 1:
            return v[0]
        raise InstantiationFault(f"list bound where a single process is needed: {n}")
    return v


def _subst_arg(a: Arg, m: Mapping[str, object]) -> Arg:
    if isinstance(a, str):
        v = m.get(a, a)
        if isinstance(v, tuple):
            return v[0] if len(v) == 1 else PlNames(v)
        return v
    # list expression: resolve refs, then evaluate combinators if concrete
    def resolve(pl: ProcList) -> ProcList:
        if isinstance(pl, PlNames):
            out: list[str] = []
            for n in pl.names:
                v = m.get(n, n)
                if isinstance(v, tuple):
                    out.extend(v)
                else:
                    out.append(v)
            return PlNames(tuple(out))
        if isinstance(pl, PlRef):
            v = m.get(pl.name)
            if v is None:
                return pl
            return PlNames((v,)) if isinstance(v, str) else PlNames(v)
        return PlOp(pl.op, resolve(pl.arg))

    pl = resolve(a)

    def concrete(p: ProcList) -> bool:
        if isinstance(p, PlNames):
            return True
        if isinstance(p, PlOp):
            return concrete(p.arg)
        return False

    if concrete(pl):
        return PlNames(eval_proclist(pl, {}))
    return pl


def substitute(c: Choreography, mapping: Mapping[str, object]) -> Choreography:
    """Simultaneous substitution of process names (actuals for formals).

    Mapping values are names or tuples of names (for list parameters).
    Capture is the caller's concern: freshen the choreography's bound names
    first (see freshen_bound). Combinators over now-concrete lists are
    evaluated away.
    """

    def sub_i(i: Instruction) -> Instruction:
        if isinstance(i, Com):
            return Com(_map_name(i.src, mapping), i.expr, _map_name(i.dst, mapping), i.fn)
        if isinstance(i, Sel):
            return Sel(_map_name(i.src, mapping), _map_name(i.dst, mapping), i.label)
        if isinstance(i, Tell):
            return Tell(
                _map_name(i.introducer, mapping),
                _map_name(i.left, mapping),
                _map_name(i.right, mapping),
            )
        if isinstance(i, Start):
            return Start(_map_name(i.parent, mapping), i.child, i.child_type)
        if isinstance(i, Cond):
            return Cond(
                _map_name(i.proc, mapping),
                i.guard,
                substitute(i.then_body, mapping),
                substitute(i.else_body, mapping),
            )
        if isinstance(i, Call):
            return Call(
                i.name,
                tuple(_subst_arg(a, mapping) for a in i.args),
                tuple((h, substitute(f, mapping)) for h, f in i.fills),
            )
        if isinstance(i, Hole):
            return i
        if isinstance(i, ComSend):
            return ComSend(_map_name(i.src, mapping), i.expr, _map_name(i.dst, mapping), i.tag)
        if isinstance(i, ComRecv):
            return ComRecv(_map_name(i.src, mapping), _map_name(i.dst, mapping), i.fn, i.payload)
        if isinstance(i, SelSend):
            return SelSend(_map_name(i.src, mapping), _map_name(i.dst, mapping), i.label, i.tag)
        if isinstance(i, SelRecv):
            return SelRecv(_map_name(i.src, mapping), _map_name(i.dst, mapping), i.label, i.payload)
        if isinstance(i, TellSend):
            return TellSend(
                _map_name(i.introducer, mapping),
                _map_name(i.left, mapping),
                _map_name(i.right, mapping),
                i.tag_left,
                i.tag_right,
            )
        if isinstance(i, TellRecv):
            pay = i.payload
            if isinstance(pay, str):
                pay = _map_name(pay, mapping)
            return TellRecv(
                _map_name(i.introducer, mapping),
                _map_name(i.name, mapping),
                _map_name(i.receiver, mapping),
                pay,
            )
        raise TypeError(f"unknown instruction {i!r}")

    if isinstance(c, Done):
        return c
    if isinstance(c, DoneSeq):
        return DoneSeq(substitute(c.cont, mapping))
    return Seq(sub_i(c.instr), substitute(c.cont, mapping))


def fill_holes(c: Choreography, fills: Mapping[str, Choreography]) -> Choreography:
    """Replace holes by their fills, descending into nested call fill maps."""
    if isinstance(c, Done):
        return c
    if isinstance(c, DoneSeq):
        return DoneSeq(fill_holes(c.cont, fills))
    i = c.instr
    rest = fill_holes(c.cont, fills)
    if isinstance(i, Hole) and i.name in fills:
        return seq_compose(fills[i.name], rest)
    if isinstance(i, Cond):
        i = Cond(i.proc, i.guard, fill_holes(i.then_body, fills), fill_holes(i.else_body, fills))
    elif isinstance(i, Call):
        i = Call(i.name, i.args, tuple((h, fill_holes(f, fills)) for h, f in i.fills))
    return Seq(i, rest)


def freshen_bound(c: Choreography, used: set[str]) -> tuple[Choreography, set[str]]:
    """Rename every bound (start-child) name to a fresh one.

    Returns the renamed choreography and the enlarged used-set. Deterministic
    given the used-set, which is what lets independently explored
    interleavings converge on identical states.
    """
    used = set(used)

    def go(c: Choreography) -> Choreography:
        nonlocal used
        if isinstance(c, Done):
            return c
        if isinstance(c, DoneSeq):
            return DoneSeq(go(c.cont))
        i = c.instr
        if isinstance(i, Start):
            fresh = fresh_name(_strip_suffix(i.child), used)
            used.add(fresh)
            renamed = substitute(c.cont, {i.child: fresh})
            return Seq(Start(i.parent, fresh, i.child_type), go(renamed))
        if isinstance(i, Cond):
            i = Cond(i.proc, i.guard, go(i.then_body), go(i.else_body))
        elif isinstance(i, Call):
            i = Call(i.name, i.args, tuple((h, go(f)) for h, f in i.fills))
        return Seq(i, go(c.cont))

    return go(c), used


# ============================================================
# PROCEDURES AND PROGRAMS
# ============================================================


@dataclass(frozen=True)
class Param:
    name: str
    type: Optional[ValueType]  # None until inferred
    is_list: bool = False

    def __str__(self) -> str:
        star = "*" if self.is_list else ""
        t = f": {self.type}" if self.type is not None else ""
        return f"{self.name}{star}{t}"


@dataclass(frozen=True)
class ProcedureDef:
    name: str
    params: tuple[Param, ...]
    holes: tuple[str, ...]
    body: Choreography

    def param_names(self) -> tuple[str, ...]:
        return tuple(p.name for p in self.params)


@dataclass(frozen=True)
class MainProc:
    name: str
    type: ValueType
    value: object


@dataclass(frozen=True)
class Program:
    defs: tuple[ProcedureDef, ...]
    mains: tuple[MainProc, ...]
    main: Choreography

    def def_map(self) -> dict[str, ProcedureDef]:
        return {d.name: d for d in self.defs}

    def initial_state(self) -> dict[str, object]:
        return {m.name: m.value for m in self.mains}
