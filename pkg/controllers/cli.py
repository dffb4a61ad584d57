"""Command line for the elimination library.

Usage examples:
    bezout resultant --var x samples/two_quadrics.psys
    bezout bezoutian --var x samples/two_quadrics.psys --trace
    bezout identity samples/coprime_pair.psys
    bezout eliminate --method somme2 --runs 3 system.psys --format json
    bezout count --vars 2 --degree 3 --remove u:2,x:1
    bezout count --degrees 2,3,4
    bezout solve1762 --n 3 --p -3 --q 2
    bezout parse system.psys

Exit status: 0 on success, 2 on usage or parse errors, 3 when the input
is mathematically degenerate.
"""
import argparse
import logging
import sys
from dataclasses import replace
from fractions import Fraction

from config import Config
from exceptions import EXIT_OK, EXIT_USAGE, BezoutError, ParseError, UsageError
from models.report import BezoutianReport, CountReport, IdentityReport
from services import counting, exactla, multielim, resolvent1762, sysio
from services.polyring import collect_wrt
from services.resultant2 import (
    bezout_identity,
    bezoutian_matrix,
    bezoutian_sign,
    bezoutian_unequal,
    eliminate_pair,
)

logger = logging.getLogger(__name__)

PAIR_METHODS = ('sylvester', 'bezoutian')


def _read_source(path):
    if path == '-':
        return sys.stdin.read()
    try:
        with open(path, encoding='utf-8') as handle:
            return handle.read()
    except OSError as e:
        raise UsageError(f"cannot read '{path}': {e.strerror}") from None


def _load_system(args, require_keep=False):
    system = sysio.parse_system(_read_source(args.path), require_keep=require_keep)
    system.check_size()
    return system


def _main_var(system, requested):
    """Variable eliminated by the two-equation commands"""
    if requested:
        if requested not in system.vars:
            raise UsageError(f"--var '{requested}' is not among {list(system.vars)}")
        return requested
    if system.keep is not None and len(system.eliminated) == 1:
        return system.eliminated[0]
    return system.vars.names[0]


def _pair(system, requested):
    if len(system.equations) != 2:
        raise UsageError(f"this command needs exactly 2 equations, got {len(system.equations)}")
    var = _main_var(system, requested)
    f, g = (collect_wrt(eq, var) for eq in system.equations)
    return var, f, g


def _others(system, var):
    return tuple(n for n in system.table if n != var)


def cmd_resultant(args):
    system = _load_system(args)
    var, f, g = _pair(system, args.var)
    method = args.method or 'sylvester'
    if method not in PAIR_METHODS:
        raise UsageError(f"resultant takes --method sylvester or bezoutian, got '{method}'")
    return eliminate_pair(f, g, method, keep=_others(system, var))


def cmd_bezoutian(args):
    system = _load_system(args)
    var, f, g = _pair(system, args.var)
    if f.m < g.m:
        f, g = g, f
    trace = [f"f = {f}", f"g = {g}"]
    if f.m == g.m:
        layout = bezoutian_matrix(f, g)
        divisor = bezoutian_sign(f.m)
        relation = f"det = {divisor} * resultant (m = {f.m})"
    else:
        layout = bezoutian_unequal(f, g)
        exponent = (g.m - 1) * (f.m - g.m)
        divisor = layout.extraneous * layout.sign
        relation = f"det = {layout.sign} * ({g.leading})^{exponent} * resultant"
        trace.append(f"{layout.substitution_exponent} substitution steps modulo g")
    trace.extend(layout.matrix.text_lines())
    determinant = exactla.det_fraction_free(layout.matrix)
    keep = _others(system, var)
    return BezoutianReport(
        method='bezoutian',
        matrix=layout.matrix,
        determinant=determinant.restrict(keep),
        resultant=determinant.exact_div(divisor).restrict(keep),
        relation=relation,
        trace=trace,
    )


def cmd_identity(args):
    system = _load_system(args)
    var, P, Q = _pair(system, args.var)
    witness = bezout_identity(P, Q)
    L1, L2 = witness.L1.reassemble(), witness.L2.reassemble()
    check = witness.combination(P, Q)
    return IdentityReport(
        P=P.reassemble(),
        Q=Q.reassemble(),
        L1=L1,
        L2=L2,
        trace=[f"({L1})*({P}) + ({L2})*({Q}) = {check}"],
    )


def cmd_eliminate(args):
    system = _load_system(args)
    method = args.method or system.method or multielim.METHOD_SECOND
    if method in PAIR_METHODS:
        var, f, g = _pair(system, args.var)
        keep = (system.keep,) + system.params if system.keep else _others(system, var)
        report = eliminate_pair(f, g, method, keep=keep)
        return replace(report, keep=system.keep)
    if system.keep is None:
        raise UsageError("the equation-somme methods need a 'keep:' directive")
    return multielim.eliminate(system, method=method, runs=args.runs, seed=args.seed)


def cmd_count(args):
    if args.degrees:
        try:
            degrees = [int(d) for d in args.degrees.split(',')]
        except ValueError:
            raise UsageError(f"--degrees takes a comma-separated list of integers, got '{args.degrees}'") from None
        value = counting.resultant_degree_complete(degrees)
        difference_form = counting.degree_by_differences(degrees)
        return CountReport(
            value=value,
            details={'degrees': degrees, 'by_differences': str(difference_form)},
            trace=[f"differences of N({len(degrees)}, T): {difference_form}"],
        )
    if args.vars is None or args.degree is None:
        raise UsageError("count needs --vars and --degree, or --degrees")
    if args.remove:
        spec = counting.RemovalSpec.parse(args.remove)
        names = counting.default_variable_names(args.vars) if not args.names else tuple(args.names.split(','))
        value = counting.terms_after_removals(args.vars, args.degree, spec, names=names)
        return CountReport(
            value=value,
            details={'vars': args.vars, 'degree': args.degree, 'removed': dict(spec.bounds)},
        )
    value = counting.num_terms_complete(args.vars, args.degree)
    return CountReport(value=value, details={'vars': args.vars, 'degree': args.degree})


def cmd_solve1762(args):
    return resolvent1762.solve_class(args.n, args.p, args.q, digits=args.digits)


def cmd_parse(args):
    return sysio.system_report(_load_system(args))


COMMANDS = {
    'resultant': cmd_resultant,
    'bezoutian': cmd_bezoutian,
    'identity': cmd_identity,
    'eliminate': cmd_eliminate,
    'count': cmd_count,
    'solve1762': cmd_solve1762,
    'parse': cmd_parse,
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--format', choices=('text', 'json'), default='text')
    common.add_argument('--trace', action='store_true', help='append intermediate steps')
    common.add_argument('--seed', type=int, default=None, help='arbitrary-equation family selector')
    common.add_argument('--runs', type=int, default=None, help='elimination runs for factor stripping')
    common.add_argument('--verbose', action='store_true', help='debug logging on stderr')

    parser = argparse.ArgumentParser(
        prog='bezout',
        description='Exact elimination of unknowns between polynomial equations',
    )
    sub = parser.add_subparsers(dest='command', required=True)

    for name, help_text in (
        ('resultant', 'resultant of two equations in one unknown'),
        ('bezoutian', 'Bezoutian matrix, determinant and sign relation'),
        ('identity', 'L1, L2 with L1*P + L2*Q = 1'),
        ('parse', 'echo a system in canonical form'),
    ):
        cmd = sub.add_parser(name, parents=[common], help=help_text)
        cmd.add_argument('path', help="system file, or '-' for stdin")
        if name != 'parse':
            cmd.add_argument('--var', help='unknown to eliminate')
        if name == 'resultant':
            cmd.add_argument('--method', choices=PAIR_METHODS)

    cmd = sub.add_parser('eliminate', parents=[common], help='eliminate every unknown but keep')
    cmd.add_argument('path', help="system file, or '-' for stdin")
    cmd.add_argument('--method', choices=sysio.METHODS)
    cmd.add_argument('--var', help='unknown to eliminate (two-equation methods)')

    cmd = sub.add_parser('count', parents=[common], help='monomial and degree counts')
    cmd.add_argument('--vars', type=int, help='number of unknowns')
    cmd.add_argument('--degree', type=int, help='complete degree T')
    cmd.add_argument('--remove', help="removed powers, e.g. 'u:2,x:1'")
    cmd.add_argument('--names', help='comma-separated variable names (default u,x,y,z,...)')
    cmd.add_argument('--degrees', help='equation degrees, e.g. 2,3,4')

    cmd = sub.add_parser('solve1762', parents=[common], help='radical root of a solvable class')
    cmd.add_argument('--n', type=int, required=True)
    cmd.add_argument('--p', type=Fraction, required=True)
    cmd.add_argument('--q', type=Fraction, required=True)
    cmd.add_argument('--digits', type=int, default=None)
    return parser


def _configure_logging(verbose):
    level = logging.DEBUG if verbose else getattr(logging, Config.LOG_LEVEL, logging.WARNING)
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
    )
    logging.getLogger().setLevel(level)


def run(argv=None):
    """Execute one command; returns the exit status"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    _configure_logging(args.verbose)
    try:
        report = COMMANDS[args.command](args)
        print(sysio.render_report(report, fmt=args.format, trace=args.trace))
    except ParseError as e:
        for diagnostic in e.diagnostics:
            print(f"{getattr(args, 'path', '-')}: {diagnostic}", file=sys.stderr)
        return e.exit_code
    except BezoutError as e:
        logger.debug(f"{args.command} failed", exc_info=True)
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code
    return EXIT_OK


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == '__main__':
    main()
