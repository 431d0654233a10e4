"""Concrete surface syntax for choreography programs, and its printer.

Grammar sketch (full reference in the README):

    program    := def* main
    def        := "def" NAME "(" params ["," "holes" names] ")" "=" block
    param      := NAME ["*"] [":" type]             -- "*" marks a list param
    main       := "main" "{" decl* stmt* "}"
    decl       := NAME ":" type "=" literal ";"
    stmt       := p "." expr "->" q ["." expr] ";"  -- communication
                | p "->" q,... "[" label "]" ";"    -- selection(s)
                | p ":" q "<->" r ";"               -- introduction
                | p "start" q [":" type],... ";"    -- process starts
                | "if" p "." expr "then" block ["else" block] ";"
                | X "<" args ">" ["with" fills] ";" -- procedure call
                | "hole" h ";"
                | "0" ";"

Multi-target selection and start statements are sugar for the statement
sequence. Bare function names are sugar for expressions over * (the owner's
value) and $ (the received value): a unary builtin b stands for b(*) when
sent and b($) when receiving; id is $; merge/append/add stand for f(*, $);
cons for cons($, *); div/mult/minus for * op $.

Bound names are made unique program-wide at parse time (Barendregt
discipline), and a call that leaves a hole of its callee unspecified gets the
default fill: the enclosing procedure's own hole of the same name if there is
one, otherwise 0.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional

from .ast import (
    BOOL,
    FLOAT,
    INT,
    STR,
    BUILTINS,
    Arg,
    BinOp,
    BuiltinCall,
    Call,
    Choreography,
    Com,
    Cond,
    DONE,
    Done,
    DoneSeq,
    Expr,
    Hole,
    Instruction,
    Lit,
    MainProc,
    Not,
    Param,
    PlNames,
    PlOp,
    PlRef,
    ProcList,
    ProcedureDef,
    Program,
    Recvd,
    Sel,
    Seq,
    Star,
    Start,
    Tell,
    ValueType,
    bound_names,
    fresh_name,
    format_value,
    list_of,
    mentions_recvd,
    process_names,
    seq_compose,
    spine,
    value_type_of,
)

KEYWORDS = {
    "def", "main", "start", "if", "then", "else", "with", "holes", "hole",
    "not", "and", "or", "true", "false", "Int", "Float", "Bool", "Str", "List",
}

LIST_COMBINATORS = ("hd", "tl", "fst", "rest", "minor")

# bare-name sugar inside receive functions
_RECV_SUGAR = {
    "id": lambda: Recvd(),
    "div": lambda: BinOp("/", Star(), Recvd()),
    "mult": lambda: BinOp("*", Star(), Recvd()),
    "minus": lambda: BinOp("-", Star(), Recvd()),
    "merge": lambda: BuiltinCall("merge", (Star(), Recvd())),
    "append": lambda: BuiltinCall("append", (Star(), Recvd())),
    "add": lambda: BuiltinCall("add", (Star(), Recvd())),
    "cons": lambda: BuiltinCall("cons", (Recvd(), Star())),
}


class ParseError(Exception):
    def __init__(self, message: str, filename: str = "<input>", line: int = 0, col: int = 0):
        super().__init__(f"{filename}:{line}:{col}: {message}")
        self.message = message
        self.filename = filename
        self.line = line
        self.col = col


@dataclass(frozen=True)
class SourceProgram:
    text: str
    filename: str = "<input>"


# ============================================================
# LEXER
# ============================================================

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+|//[^\n]*)
  | (?P<float>\d+\.\d+)
  | (?P<int>\d+)
  | (?P<string>"(?:[^"\\]|\\.)*")
  | (?P<name>[A-Za-z_][A-Za-z0-9_']*(\#\d+)?)
  | (?P<op><->|->|[(){}\[\]<>,;:.=+\-*/$])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str  # name | int | float | string | op | eof
    text: str
    line: int
    col: int


def tokenize(src: SourceProgram) -> list[Token]:
    toks: list[Token] = []
    line, col = 1, 1
    i = 0
    text = src.text
    while i < len(text):
        m = _TOKEN_RE.match(text, i)
        if m is None:
            raise ParseError(f"unexpected character {text[i]!r}", src.filename, line, col)
        kind = m.lastgroup if m.lastgroup != "ws" else None
        lexeme = m.group(0)
        if kind == "name" and m.group(0).split("#")[0] in KEYWORDS and "#" not in lexeme:
            toks.append(Token(lexeme, lexeme, line, col))
        elif kind:
            toks.append(Token(kind, lexeme, line, col))
        for ch in lexeme:
            if ch == "\n":
                line += 1
                col = 1
            else:
                col += 1
        i = m.end()
    toks.append(Token("eof", "", line, col))
    return toks


# ============================================================
# PARSER
# ============================================================


class _Parser:
    def __init__(self, src: SourceProgram):
        self.src = src
        self.toks = tokenize(src)
        self.pos = 0
        # formal context while parsing a def body
        self.scalar_formals: set[str] = set()
        self.list_formals: set[str] = set()
        self.declared_holes: tuple[str, ...] = ()

    # ---- token plumbing ----

    def peek(self, ahead: int = 0) -> Token:
        return self.toks[min(self.pos + ahead, len(self.toks) - 1)]

    def next(self) -> Token:
        t = self.toks[self.pos]
        if t.kind != "eof":
            self.pos += 1
        return t

    def error(self, msg: str, tok: Optional[Token] = None):
        t = tok or self.peek()
        raise ParseError(msg, self.src.filename, t.line, t.col)

    def expect(self, kind: str, what: str = "") -> Token:
        t = self.peek()
        if t.kind != kind and t.text != kind:
            self.error(f"expected {what or kind!r}, found {t.text!r}")
        return self.next()

    def accept(self, kind: str) -> Optional[Token]:
        t = self.peek()
        if t.kind == kind or (t.kind == "op" and t.text == kind):
            return self.next()
        return None

    def at(self, kind: str, ahead: int = 0) -> bool:
        t = self.peek(ahead)
        return t.kind == kind or (t.kind == "op" and t.text == kind)

    def name(self, what: str = "name") -> Token:
        t = self.peek()
        if t.kind != "name":
            self.error(f"expected {what}, found {t.text!r}")
        return self.next()

    # ---- types and literals ----

    def parse_type(self) -> ValueType:
        t = self.next()
        if t.kind == "Int":
            return INT
        if t.kind == "Float":
            return FLOAT
        if t.kind == "Bool":
            return BOOL
        if t.kind == "Str":
            return STR
        if t.kind == "List":
            self.expect("(")
            inner = self.parse_type()
            self.expect(")")
            return list_of(inner)
        self.error(f"expected a type, found {t.text!r}", t)

    def parse_literal(self):
        neg = False
        if self.at("-"):
            self.next()
            neg = True
        t = self.peek()
        if t.kind == "int":
            self.next()
            v = int(t.text)
            return -v if neg else v
        if t.kind == "float":
            self.next()
            v = float(t.text)
            return -v if neg else v
        if neg:
            self.error("expected a number after '-'")
        if t.kind == "true":
            self.next()
            return True
        if t.kind == "false":
            self.next()
            return False
        if t.kind == "string":
            self.next()
            return t.text[1:-1].replace('\\"', '"').replace("\\\\", "\\")
        if self.at("["):
            self.next()
            items = []
            if not self.at("]"):
                items.append(self.parse_literal())
                while self.accept(","):
                    items.append(self.parse_literal())
            self.expect("]")
            return tuple(items)
        self.error(f"expected a literal value, found {t.text!r}")

    # ---- expressions (Pratt) ----

    _PRECEDENCE = {"or": 1, "and": 2, "=": 3, "<": 3, ">": 3, "+": 4, "-": 4, "*": 5, "/": 5}

    def parse_expr(self, role: str, min_prec: int = 1) -> Expr:
        """role: 'send' (* only), 'recv' (* and $), 'guard' (* only)."""
        left = self._parse_prefix(role)
        while True:
            t = self.peek()
            op = t.text if t.kind == "op" else t.kind
            if op not in self._PRECEDENCE or self._PRECEDENCE[op] < min_prec:
                return left
            self.next()
            right = self.parse_expr(role, self._PRECEDENCE[op] + 1)
            left = BinOp(op, left, right)

    def _parse_prefix(self, role: str) -> Expr:
        t = self.peek()
        if self.at("("):
            self.next()
            e = self.parse_expr(role)
            self.expect(")")
            return e
        if self.at("not"):
            self.next()
            return Not(self.parse_expr(role, self._PRECEDENCE["*"] + 1))
        if self.at("-"):
            self.next()
            arg = self._parse_prefix(role)
            if isinstance(arg, Lit) and isinstance(arg.value, (int, float)):
                return Lit(-arg.value)
            return BinOp("-", Lit(0), arg)
        if self.at("*"):
            self.next()
            return Star()
        if self.at("$"):
            if role != "recv":
                self.error("$ is only available in receive functions")
            self.next()
            return Recvd()
        if t.kind in ("int", "float", "string", "true", "false") or self.at("["):
            return Lit(self.parse_literal())
        if t.kind == "name":
            self.next()
            if self.at("("):
                self.next()
                args = []
                if not self.at(")"):
                    args.append(self.parse_expr(role))
                    while self.accept(","):
                        args.append(self.parse_expr(role))
                self.expect(")")
                if t.text not in BUILTINS:
                    self.error(f"unknown function {t.text!r}", t)
                if len(args) != BUILTINS[t.text][0]:
                    self.error(f"{t.text} expects {BUILTINS[t.text][0]} arguments", t)
                return BuiltinCall(t.text, tuple(args))
            return self._bare_name_sugar(t, role)
        self.error(f"expected an expression, found {t.text!r}")

    def _bare_name_sugar(self, t: Token, role: str) -> Expr:
        if role == "recv" and t.text in _RECV_SUGAR:
            return _RECV_SUGAR[t.text]()
        if t.text in BUILTINS:
            arity, _ = BUILTINS[t.text]
            if arity == 1:
                return BuiltinCall(t.text, (Recvd() if role == "recv" else Star(),))
            self.error(f"{t.text} takes {arity} arguments; write it applied", t)
        self.error(f"unknown function {t.text!r} (process values are written '*')", t)

    # ---- statements ----

    def parse_block(self) -> Choreography:
        self.expect("{")
        instrs: list[Instruction] = []
        while not self.at("}"):
            instrs.extend(self.parse_stmt())
        self.expect("}")
        out: Choreography = DONE
        for i in reversed(instrs):
            out = Seq(i, out)
        return out

    def parse_stmt(self) -> list[Instruction]:
        t = self.peek()
        if self.at("if"):
            return [self.parse_cond()]
        if self.at("hole"):
            self.next()
            h = self.name("hole name")
            if h.text not in self.declared_holes:
                self.error(f"hole {h.text!r} is not declared by this procedure", h)
            self.expect(";")
            return [Hole(h.text, span=(t.line, t.col))]
        if t.kind == "int" and t.text == "0":
            self.next()
            self.expect(";")
            return []
        if t.kind != "name":
            self.error(f"expected a statement, found {t.text!r}")
        head = self.next()
        if self.at("."):
            return [self.parse_com(head)]
        if self.at("->"):
            return self.parse_sel(head)
        if self.at(":"):
            return [self.parse_tell(head)]
        if self.at("start"):
            return self.parse_start(head)
        if self.at("<"):
            return [self.parse_call(head)]
        self.error(f"cannot parse statement starting with {head.text!r}", head)

    def parse_com(self, src: Token) -> Instruction:
        self.expect(".")
        e = self.parse_expr("send")
        self.expect("->")
        dst = self.name("receiver process")
        fn: Expr = Recvd()
        if self.accept("."):
            fn = self.parse_expr("recv")
        self.expect(";")
        if mentions_recvd(e):
            self.error("$ is only available in receive functions", src)
        return Com(src.text, e, dst.text, fn, span=(src.line, src.col))

    def parse_sel(self, src: Token) -> list[Instruction]:
        self.expect("->")
        targets = [self.name("target process")]
        while self.accept(","):
            targets.append(self.name("target process"))
        self.expect("[")
        label = self.name("label")
        self.expect("]")
        self.expect(";")
        return [Sel(src.text, t.text, label.text, span=(src.line, src.col)) for t in targets]

    def parse_tell(self, src: Token) -> Instruction:
        self.expect(":")
        left = self.name("process")
        self.expect("<->")
        right = self.name("process")
        self.expect(";")
        return Tell(src.text, left.text, right.text, span=(src.line, src.col))

    def parse_start(self, parent: Token) -> list[Instruction]:
        self.expect("start")
        out = []
        while True:
            child = self.name("child process")
            ctype = INT
            if self.accept(":"):
                ctype = self.parse_type()
            out.append(Start(parent.text, child.text, ctype, span=(parent.line, parent.col)))
            if not self.accept(","):
                break
        self.expect(";")
        return out

    def parse_call(self, name: Token, terminated: bool = True) -> Instruction:
        self.expect("<")
        args: list[Arg] = []
        if not self.at(">"):
            args.append(self.parse_call_arg())
            while self.accept(","):
                args.append(self.parse_call_arg())
        self.expect(">")
        fills: list[tuple[str, Choreography]] = []
        if self.accept("with"):
            while True:
                h = self.name("hole name")
                self.expect("->")
                if self.at("{"):
                    fills.append((h.text, self.parse_block()))
                else:
                    callee = self.name("procedure")
                    fill_call = self.parse_call(callee, terminated=False)
                    fills.append((h.text, Seq(fill_call, DONE)))
                if not self.accept(","):
                    break
        if terminated:
            self.expect(";")
        return Call(name.text, tuple(args), tuple(sorted(fills)), span=(name.line, name.col))

    def parse_call_arg(self) -> Arg:
        t = self.peek()
        if self.at("["):
            self.next()
            names = []
            if not self.at("]"):
                names.append(self.name("process").text)
                while self.accept(","):
                    names.append(self.name("process").text)
            self.expect("]")
            return PlNames(tuple(names))
        n = self.name("argument")
        if n.text in LIST_COMBINATORS and self.at("("):
            self.next()
            inner = self.parse_call_arg()
            self.expect(")")
            if isinstance(inner, str):
                inner = PlRef(inner) if inner in self.list_formals else PlNames((inner,))
            return PlOp(n.text, inner)
        if n.text in self.list_formals:
            return PlRef(n.text)
        return n.text

    def parse_cond(self) -> Instruction:
        t = self.expect("if")
        proc = self.name("process")
        self.expect(".")
        guard = self.parse_expr("guard")
        self.expect("then")
        then_body = self.parse_block()
        else_body: Choreography = DONE
        if self.accept("else"):
            else_body = self.parse_block()
        self.accept(";")
        if mentions_recvd(guard):
            self.error("$ is only available in receive functions", t)
        return Cond(proc.text, guard, then_body, else_body, span=(t.line, t.col))

    # ---- top level ----

    def parse_def(self) -> ProcedureDef:
        self.expect("def")
        name = self.name("procedure name")
        self.expect("(")
        params: list[Param] = []
        holes: list[str] = []
        if not self.at(")"):
            while True:
                if self.at("holes"):
                    self.next()
                    holes.append(self.name("hole name").text)
                    while self.accept(","):
                        holes.append(self.name("hole name").text)
                    break
                pname = self.name("parameter")
                is_list = bool(self.accept("*"))
                ptype = None
                if self.accept(":"):
                    ptype = self.parse_type()
                params.append(Param(pname.text, ptype, is_list))
                if not self.accept(","):
                    break
        self.expect(")")
        self.expect("=")
        if len({p.name for p in params}) != len(params):
            self.error(f"duplicate parameter names in {name.text}", name)
        self.scalar_formals = {p.name for p in params if not p.is_list}
        self.list_formals = {p.name for p in params if p.is_list}
        self.declared_holes = tuple(holes)
        body = self.parse_block()
        self.scalar_formals, self.list_formals, self.declared_holes = set(), set(), ()
        return ProcedureDef(name.text, tuple(params), tuple(holes), body)

    def parse_main(self) -> tuple[tuple[MainProc, ...], Choreography]:
        self.expect("main")
        self.expect("{")
        mains: list[MainProc] = []
        # declarations: NAME ':' TYPE '=' literal ';'
        while (
            self.peek().kind == "name"
            and self.at(":", 1)
            and self.peek(2).kind in ("Int", "Float", "Bool", "Str", "List")
        ):
            n = self.name()
            self.expect(":")
            t = self.parse_type()
            self.expect("=")
            v = self.parse_literal()
            self.expect(";")
            mains.append(MainProc(n.text, t, v))
        instrs: list[Instruction] = []
        while not self.at("}"):
            instrs.extend(self.parse_stmt())
        self.expect("}")
        out: Choreography = DONE
        for i in reversed(instrs):
            out = Seq(i, out)
        return tuple(mains), out

    def parse_program(self) -> Program:
        defs = []
        while self.at("def"):
            defs.append(self.parse_def())
        mains, main = self.parse_main()
        self.expect("eof", "end of input")
        return Program(tuple(defs), mains, main)


# ============================================================
# VALIDATION (second pass over the parsed tree)
# ============================================================


def _walk_instrs(c: Choreography):
    for i in spine(c):
        yield i
        if isinstance(i, Cond):
            yield from _walk_instrs(i.then_body)
            yield from _walk_instrs(i.else_body)
        elif isinstance(i, Call):
            for _, f in i.fills:
                yield from _walk_instrs(f)


def _err(msg: str, filename: str, i: Optional[Instruction] = None):
    line, col = (i.span or (0, 0)) if i is not None else (0, 0)
    raise ParseError(msg, filename, line, col)


def _validate(program: Program, filename: str) -> Program:
    defs = program.def_map()
    seen = set()
    for d in program.defs:
        if d.name in seen:
            raise ParseError(f"procedure {d.name} defined twice", filename)
        seen.add(d.name)

    def check_calls(c: Choreography, enclosing: Optional[ProcedureDef]):
        for i in _walk_instrs(c):
            if not isinstance(i, Call):
                continue
            d = defs.get(i.name)
            if d is None:
                _err(f"call to undefined procedure {i.name}", filename, i)
            if len(i.args) != len(d.params):
                _err(
                    f"{i.name} takes {len(d.params)} arguments, got {len(i.args)}",
                    filename,
                    i,
                )
            scalars = [a for a in i.args if isinstance(a, str)]
            if len(set(scalars)) != len(scalars):
                _err(f"duplicate argument in call to {i.name}", filename, i)
            for a, p in zip(i.args, d.params):
                if p.is_list and isinstance(a, str):
                    _err(f"{i.name}: parameter {p.name} expects a process list", filename, i)
                if not p.is_list and not isinstance(a, str):
                    ok = isinstance(a, (PlNames, PlOp))  # singleton lists unwrap at call time
                    if not ok:
                        _err(f"{i.name}: parameter {p.name} expects a single process", filename, i)
            arg_names = process_names(Call(i.name, i.args))
            for h, f in i.fills:
                if h not in d.holes:
                    _err(f"{i.name} has no hole named {h}", filename, i)
                extra = process_names(f) - arg_names
                if extra:
                    _err(
                        f"hole {h} mentions processes outside the call's arguments: "
                        + ", ".join(sorted(extra)),
                        filename,
                        i,
                    )

    for d in program.defs:
        formals = set(d.param_names())
        free = process_names(d.body) - formals
        if free:
            _err(
                f"procedure {d.name} mentions unbound processes: " + ", ".join(sorted(free)),
                filename,
            )
        first = spine(d.body)
        if first and isinstance(first[0], Call):
            _err(f"procedure {d.name} must not start with a procedure call", filename, first[0])
        check_calls(d.body, d)

    declared = {m.name for m in program.mains}
    if len(declared) != len(program.mains):
        raise ParseError("duplicate main process declaration", filename)
    for m in program.mains:
        vt = value_type_of(m.value) if m.value != () else list_of(None)
        from .ast import types_compatible

        if not types_compatible(vt, m.type):
            raise ParseError(
                f"initial value of {m.name} does not have type {m.type}", filename
            )
    free = process_names(program.main)
    if free != declared:
        missing = free - declared
        unused = declared - free
        if missing:
            raise ParseError(
                "undeclared processes in main: " + ", ".join(sorted(missing)), filename
            )
        raise ParseError(
            "declared main processes never used: " + ", ".join(sorted(unused)), filename
        )
    check_calls(program.main, None)
    return program


def _default_fills(program: Program) -> Program:
    """Complete every call's fill map with the default for unspecified holes."""
    defs = program.def_map()

    def complete(c: Choreography, own_holes: tuple[str, ...]) -> Choreography:
        if isinstance(c, Done):
            return c
        if isinstance(c, DoneSeq):
            return DoneSeq(complete(c.cont, own_holes))
        i = c.instr
        if isinstance(i, Cond):
            i = Cond(
                i.proc,
                i.guard,
                complete(i.then_body, own_holes),
                complete(i.else_body, own_holes),
                span=i.span,
            )
        elif isinstance(i, Call):
            d = defs[i.name]
            given = dict(i.fills)
            fills = []
            for h in d.holes:
                if h in given:
                    fills.append((h, complete(given[h], own_holes)))
                elif h in own_holes:
                    fills.append((h, Seq(Hole(h), DONE)))
                else:
                    fills.append((h, DONE))
            i = Call(i.name, i.args, tuple(sorted(fills)), span=i.span)
        return Seq(i, complete(c.cont, own_holes))

    new_defs = tuple(
        ProcedureDef(d.name, d.params, d.holes, complete(d.body, d.holes))
        for d in program.defs
    )
    return Program(new_defs, program.mains, complete(program.main, ()))


def _barendregt(program: Program) -> Program:
    """Make every bound (start-child) name unique program-wide."""
    from .ast import substitute

    assigned: set[str] = {m.name for m in program.mains}
    for d in program.defs:
        assigned |= set(d.param_names())

    def go(c: Choreography) -> Choreography:
        if isinstance(c, Done):
            return c
        if isinstance(c, DoneSeq):
            return DoneSeq(go(c.cont))
        i = c.instr
        rest = c.cont
        if isinstance(i, Start):
            child = i.child
            if child in assigned:
                child = fresh_name(i.child.split("#")[0], assigned)
                rest = substitute(rest, {i.child: child})
                i = Start(i.parent, child, i.child_type, span=i.span)
            assigned.add(child)
        elif isinstance(i, Cond):
            i = Cond(i.proc, i.guard, go(i.then_body), go(i.else_body), span=i.span)
        elif isinstance(i, Call):
            i = Call(i.name, i.args, tuple((h, go(f)) for h, f in i.fills), span=i.span)
        return Seq(i, go(rest))

    new_defs = tuple(
        ProcedureDef(d.name, d.params, d.holes, go(d.body)) for d in program.defs
    )
    new_main = go(program.main)
    return Program(new_defs, program.mains, new_main)


def parse_program(src: SourceProgram | str, filename: str = "<input>") -> Program:
    if isinstance(src, str):
        src = SourceProgram(src, filename)
    program = _Parser(src).parse_program()
    program = _barendregt(program)
    program = _validate(program, src.filename)
    program = _default_fills(program)
    return program


# ============================================================
# PRINTER
# ============================================================


def format_type(t: ValueType) -> str:
    return str(t)


def format_expr(e: Expr) -> str:
    return str(e)


def _format_arg(a: Arg) -> str:
    return a if isinstance(a, str) else str(a)


def _is_default_fill(h: str, f: Choreography, own_holes: tuple[str, ...]) -> bool:
    items = spine(f)
    if not items:
        return h not in own_holes
    return len(items) == 1 and isinstance(items[0], Hole) and items[0].name == h and h in own_holes


def format_chor(c: Choreography, indent: int, own_holes: tuple[str, ...] = ()) -> list[str]:
    pad = "  " * indent
    out: list[str] = []
    items = spine(c)
    if not items:
        return [pad + "0;"]
    for i in items:
        if isinstance(i, Com):
            fn = "" if i.fn == Recvd() else f".{format_expr(i.fn)}"
            out.append(f"{pad}{i.src}.{format_expr(i.expr)} -> {i.dst}{fn};")
        elif isinstance(i, Sel):
            out.append(f"{pad}{i.src} -> {i.dst}[{i.label}];")
        elif isinstance(i, Tell):
            out.append(f"{pad}{i.introducer}: {i.left} <-> {i.right};")
        elif isinstance(i, Start):
            out.append(f"{pad}{i.parent} start {i.child}: {format_type(i.child_type)};")
        elif isinstance(i, Cond):
            out.append(f"{pad}if {i.proc}.{format_expr(i.guard)} then {{")
            out.extend(format_chor(i.then_body, indent + 1, own_holes))
            out.append(f"{pad}}} else {{")
            out.extend(format_chor(i.else_body, indent + 1, own_holes))
            out.append(f"{pad}}};")
        elif isinstance(i, Call):
            args = ", ".join(_format_arg(a) for a in i.args)
            shown = [(h, f) for h, f in i.fills if not _is_default_fill(h, f, own_holes)]
            if shown:
                parts = []
                for h, f in shown:
                    body = "\n".join(format_chor(f, indent + 1, own_holes))
                    parts.append(f"{h} -> {{\n{body}\n{pad}}}")
                out.append(f"{pad}{i.name}<{args}> with " + ", ".join(parts) + ";")
            else:
                out.append(f"{pad}{i.name}<{args}>;")
        elif isinstance(i, Hole):
            out.append(f"{pad}hole {i.name};")
        else:
            raise ValueError(f"cannot print runtime term {i!r}")
    return out


def format_program(program: Program) -> str:
    lines: list[str] = []
    for d in program.defs:
        params = ", ".join(str(p) for p in d.params)
        if d.holes:
            holes = "holes " + ", ".join(d.holes)
            params = f"{params}, {holes}" if params else holes
        lines.append(f"def {d.name}({params}) = {{")
        lines.extend(format_chor(d.body, 1, d.holes))
        lines.append("}")
        lines.append("")
    lines.append("main {")
    for m in program.mains:
        lines.append(f"  {m.name}: {format_type(m.type)} = {format_value(m.value)};")
    lines.extend(format_chor(program.main, 1))
    lines.append("}")
    return "\n".join(lines) + "\n"
