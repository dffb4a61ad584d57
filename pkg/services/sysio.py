"""Reading and writing polynomial systems (.psys) and reports.

File format, one item per line:

    # comment
    vars: x y z          unknowns, in VarTable order
    params: a b          symbolic coefficients (optional)
    keep: z              the unknown that survives elimination
    method: somme2       sylvester | bezoutian | somme1 | somme2
    seed: 0              arbitrary-equation family selector
    x^2*y + 3*x - 1/2 = 0

An equation without "=" means "= 0"; "lhs = rhs" means lhs - rhs = 0.
Expressions use + - * ^ and parentheses; * is never implicit and ^ takes
a non-negative integer literal.
"""
import json
import logging
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from exceptions import ParseError, UsageError
from models.polynomial import MultiPoly, VarTable
from models.report import SystemReport
from models.system import PolySystem

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1
METHODS = ('sylvester', 'bezoutian', 'somme1', 'somme2')
DIRECTIVES = ('vars', 'params', 'keep', 'method', 'seed')

_DIRECTIVE_RE = re.compile(r'^\s*([A-Za-z_]+)\s*:(.*)$')
_TOKEN_RE = re.compile(
    r'(?P<space>\s+)|(?P<number>\d+(?:/\d+)?)|(?P<ident>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*^()=])'
)


@dataclass(frozen=True)
class Diagnostic:
    """One parse problem; line and column are 1-based"""
    line: int
    column: int
    message: str
    expected: tuple = ()

    def __str__(self):
        text = f"line {self.line}, column {self.column}: {self.message}"
        if self.expected:
            text += f" (expected {', '.join(self.expected)})"
        return text


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    column: int


@dataclass
class SystemDocument:
    """Directives and raw equation lines of a .psys file"""
    vars: list = field(default_factory=list)
    params: list = field(default_factory=list)
    keep: Optional[str] = None
    method: Optional[str] = None
    seed: Optional[int] = None
    equations: list = field(default_factory=list)  # (line number, text)
    comments: list = field(default_factory=list)


class _LineError(Exception):
    def __init__(self, column, message, expected=()):
        super().__init__(message)
        self.column = column
        self.message = message
        self.expected = tuple(expected)


def tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            raise _LineError(pos + 1, f"unexpected character '{text[pos]}'")
        kind = match.lastgroup
        if kind != 'space':
            tokens.append(Token(kind, match.group(), pos + 1))
        pos = match.end()
    tokens.append(Token('end', '', len(text) + 1))
    return tokens


class _ExpressionParser:
    """Recursive descent over one line's tokens.

    expr  := unary (('+' | '-') unary)*
    unary := '-' unary | term
    term  := power ('*' power)*
    power := atom ('^' INTEGER)?
    atom  := RATIONAL | IDENT | '(' expr ')'
    """

    def __init__(self, tokens, vars):
        self.tokens = tokens
        self.pos = 0
        self.vars = vars

    @property
    def current(self):
        return self.tokens[self.pos]

    def advance(self):
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def accept(self, text):
        if self.current.kind == 'op' and self.current.text == text:
            return self.advance()
        return None

    def fail(self, expected):
        token = self.current
        found = 'end of line' if token.kind == 'end' else f"'{token.text}'"
        raise _LineError(token.column, f"unexpected {found}", expected)

    def parse_expr(self):
        result = self.parse_unary()
        while True:
            if self.accept('+'):
                result = result + self.parse_unary()
            elif self.accept('-'):
                result = result - self.parse_unary()
            else:
                return result

    def parse_unary(self):
        if self.accept('-'):
            return -self.parse_unary()
        return self.parse_term()

    def parse_term(self):
        result = self.parse_power()
        while self.accept('*'):
            result = result * self.parse_power()
        return result

    def parse_power(self):
        base = self.parse_atom()
        if self.accept('^'):
            token = self.current
            if token.kind != 'number' or '/' in token.text:
                self.fail(('non-negative integer exponent',))
            self.advance()
            return base ** int(token.text)
        return base

    def parse_atom(self):
        token = self.current
        if token.kind == 'number':
            self.advance()
            num, _, den = token.text.partition('/')
            if den and int(den) == 0:
                raise _LineError(token.column, "zero denominator")
            return MultiPoly.const(Fraction(int(num), int(den or 1)), self.vars)
        if token.kind == 'ident':
            self.advance()
            if token.text not in self.vars:
                raise _LineError(token.column, f"undeclared variable '{token.text}'")
            return MultiPoly.var(token.text, self.vars)
        if self.accept('('):
            inner = self.parse_expr()
            if not self.accept(')'):
                self.fail(("')'", "'+'", "'-'", "'*'"))
            return inner
        self.fail(('number', 'variable', "'('"))

    def parse_equation(self):
        lhs = self.parse_expr()
        if self.accept('='):
            rhs = self.parse_expr()
            lhs = lhs - rhs
        if self.current.kind != 'end':
            self.fail(("'+'", "'-'", "'*'", "'='", 'end of line'))
        return lhs


def _parse_line(text, vars):
    return _ExpressionParser(tokenize(text), vars).parse_equation()


def parse_polynomial(text, vars):
    """Read one expression (or "lhs = rhs") over `vars`"""
    if not isinstance(vars, VarTable):
        vars = VarTable(tuple(vars))
    try:
        return _parse_line(text, vars)
    except _LineError as e:
        raise ParseError([Diagnostic(1, e.column, e.message, e.expected)]) from None


class SystemParser:
    """Reads a .psys document, collecting one diagnostic per offending line"""

    def __init__(self):
        self.diagnostics = []

    def _error(self, line, column, message, expected=()):
        self.diagnostics.append(Diagnostic(line, column, message, tuple(expected)))

    def _names(self, lineno, value_col, value):
        names = []
        for match in re.finditer(r'[^\s,]+', value):
            name = match.group()
            if not name.isidentifier():
                self._error(lineno, value_col + match.start(), f"invalid name '{name}'", ('identifier',))
                continue
            names.append(name)
        return names

    def _directive(self, doc, lineno, key, value, value_col, seen):
        stripped = value.strip()
        col = value_col + (len(value) - len(value.lstrip()))
        if key in seen and key != 'params':
            self._error(lineno, 1, f"duplicate '{key}:' directive (first on line {seen[key]})")
            return
        seen.setdefault(key, lineno)
        if key == 'vars':
            doc.vars.extend(self._names(lineno, value_col, value))
        elif key == 'params':
            doc.params.extend(self._names(lineno, value_col, value))
        elif key == 'keep':
            if not stripped.isidentifier():
                self._error(lineno, col, f"invalid keep variable '{stripped}'", ('identifier',))
            else:
                doc.keep = stripped
        elif key == 'method':
            if stripped not in METHODS:
                self._error(lineno, col, f"unknown method '{stripped}'", METHODS)
            else:
                doc.method = stripped
        elif key == 'seed':
            if not stripped.isdigit():
                self._error(lineno, col, f"seed must be a non-negative integer, got '{stripped}'")
            else:
                doc.seed = int(stripped)

    def parse_document(self, text):
        doc = SystemDocument()
        seen = {}
        for lineno, line in enumerate(text.splitlines(), 1):
            if not line.strip():
                continue
            if line.lstrip().startswith('#'):
                doc.comments.append(line.strip())
                continue
            match = _DIRECTIVE_RE.match(line)
            if match:
                key = match.group(1)
                if key not in DIRECTIVES:
                    self._error(lineno, match.start(1) + 1, f"unknown directive '{key}:'", DIRECTIVES)
                    continue
                self._directive(doc, lineno, key, match.group(2), match.start(2) + 1, seen)
                continue
            doc.equations.append((lineno, line))
        return doc

    def parse_system(self, text, require_keep=False):
        doc = self.parse_document(text)
        table = None
        if not doc.vars:
            self._error(1, 1, "missing 'vars:' directive")
        else:
            try:
                table = VarTable(tuple(doc.vars) + tuple(doc.params))
            except UsageError as e:
                self._error(self._directive_line(text, 'vars'), 1, str(e))
        if doc.keep is not None and doc.keep not in doc.vars:
            self._error(self._directive_line(text, 'keep'), 1, f"keep variable '{doc.keep}' is not declared in vars")
        if require_keep and doc.keep is None:
            self._error(1, 1, "missing 'keep:' directive")
        if not doc.equations:
            self._error(len(text.splitlines()) or 1, 1, "no equations")

        equations = []
        if table is not None:
            for lineno, line in doc.equations:
                try:
                    equations.append(_parse_line(line, table))
                except _LineError as e:
                    self._error(lineno, e.column, e.message, e.expected)
        if self.diagnostics:
            self.diagnostics.sort(key=lambda d: (d.line, d.column))
            raise ParseError(self.diagnostics)
        logger.debug(f"parse_system: {len(equations)} equations over {list(table)}")
        return PolySystem(
            equations=tuple(equations),
            vars=VarTable(tuple(doc.vars)),
            keep=doc.keep,
            params=tuple(doc.params),
            method=doc.method,
            seed=doc.seed,
        )

    @staticmethod
    def _directive_line(text, key):
        for n, line in enumerate(text.splitlines(), 1):
            match = _DIRECTIVE_RE.match(line)
            if match and match.group(1) == key:
                return n
        return 1


def parse_document(text):
    return SystemParser().parse_document(text)


def parse_system(text, require_keep=False):
    """Read a .psys document into a PolySystem.

    Raises:
        ParseError: with every diagnostic found, ordered by position
    """
    return SystemParser().parse_system(text, require_keep=require_keep)


def render_polynomial(p):
    """Canonical text, readable back by parse_polynomial"""
    return str(p)


def system_report(system):
    return SystemReport(
        vars=tuple(system.vars),
        keep=system.keep,
        params=tuple(system.params),
        method=system.method,
        seed=system.seed,
        equations=[render_polynomial(eq) for eq in system.equations],
    )


def render_report(report, fmt='text', trace=False):
    """Text or JSON form of any report; JSON carries "schema" first"""
    if fmt == 'json':
        payload = {'schema': SCHEMA_VERSION}
        payload.update(report.to_dict())
        if not trace:
            payload.pop('trace', None)
        return json.dumps(payload, indent=2)
    if fmt != 'text':
        raise UsageError(f"unknown format '{fmt}' (expected text or json)")
    lines = list(report.text_lines())
    if trace and getattr(report, 'trace', None):
        lines.append('trace:')
        lines.extend(f"  {line}" for line in report.trace)
    return '\n'.join(lines)
