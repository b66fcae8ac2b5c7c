# -*- coding: utf-8 -*-
"""Command line interface.

Exit codes: 0 on success, 1 when a computation refuses its input (for
instance a spectrum without a 3-stage structure), 2 on a usage error.
"""

from __future__ import print_function
import argparse
import logging
import sys
from math import factorial

from sympy import isprime

from gammastage import __version__, dyerlashof, kochman, lietree, stagescan, writers
from gammastage.errors import GammaStageError, NoPositiveElement
from gammastage.loaders import load_spectrum

log = logging.getLogger(__name__)

WRITERS = {
    'text': writers.Text,
    'json': writers.Json,
    'yaml': writers.Yaml,
}


def _prime(text):
    try:
        p = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("%r is not an integer" % text)
    if not isprime(p):
        raise argparse.ArgumentTypeError("%d is not a prime" % p)
    return p


def _positive(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("%r is not an integer" % text)
    if value < 1:
        raise argparse.ArgumentTypeError("%d is not positive" % value)
    return value


def _non_negative(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("%r is not an integer" % text)
    if value < 0:
        raise argparse.ArgumentTypeError("%d is negative" % value)
    return value


def build_parser():
    parser = argparse.ArgumentParser(
        prog='gammastage',
        description="Coherence bounds for partial E-infinity structures by degree counting.")
    parser.add_argument('--version', action='version', version='%(prog)s ' + __version__)
    sub = parser.add_subparsers(dest='command', metavar='command')
    sub.required = True

    def command(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument('--format', choices=sorted(WRITERS), default='text', help="output format")
        return p

    def spectrum_options(p):
        p.add_argument('--spectrum', choices=sorted(stagescan.PRESETS), help="built-in spectrum")
        p.add_argument('--prime', type=_prime, help="the prime p")
        p.add_argument('--index', type=_positive, default=1, help="i for e/e-localized, n for kn/pn")
        p.add_argument('--input', help="spectrum presentation file (JSON or YAML)")

    p = command('report', "stage bounds for a spectrum")
    spectrum_options(p)
    p.add_argument('--exploratory', action='store_true',
                   help="also list windows allowed by a positive degree shift")

    p = command('kochman', "Kochman basis of the p-torsion of HZ_*HZ")
    p.add_argument('--prime', type=_prime, required=True, help="the prime p")
    p.add_argument('--max-degree', type=_non_negative, default=30, help="largest degree listed")

    p = command('trees', "tree shapes and the relative homology of the tree space")
    p.add_argument('--n', type=_positive, required=True, help="arity")

    p = command('lie', "left-normed basis of Lie(n)")
    p.add_argument('--n', type=_positive, required=True, help="arity")

    p = command('dl', "Dyer-Lashof operations provided by a stage")
    spectrum_options(p)
    p.add_argument('--stage', type=_positive, help="available n-stage structure")
    p.add_argument('--class-degree', type=_non_negative, help="degree |x| of the class")

    p = command('degrees', "degree support of coefficients and cooperations")
    spectrum_options(p)
    p.add_argument('--max-degree', type=_non_negative, default=30, help="largest degree listed")

    p = command('stage', "what an n-stage structure consists of")
    p.add_argument('--n', type=_positive, required=True, help="the stage")

    return parser


def _presentation(args, parser):
    """The presentation named by --input or --spectrum/--prime/--index, or None."""
    if args.input and args.spectrum:
        parser.error("--input and --spectrum exclude each other")
    if args.input:
        return load_spectrum(args.input)
    if args.spectrum:
        if args.prime is None:
            parser.error("--spectrum needs --prime")
        return stagescan.preset(args.spectrum, args.prime, args.index)
    return None


def _report(args, parser):
    spec = _presentation(args, parser)
    if spec is None:
        parser.error("report needs --spectrum or --input")
    r = stagescan.report(spec, exploratory=args.exploratory)
    data = {'command': 'report'}
    data.update(r.as_dict())
    return data


def _kochman(args, parser):
    table = kochman.enumerate_by_degree(args.prime, args.max_degree)
    return {
        'command': 'kochman',
        'prime': args.prime,
        'max_degree': args.max_degree,
        'min_odd_degree': kochman.min_odd_degree(args.prime),
        'degrees': dict((str(d), [str(g) for g in table[d]]) for d in sorted(table)),
    }


def _trees(args, parser):
    shapes = lietree.enumerate_tree_shapes(args.n)
    homology = None
    if 2 <= args.n <= lietree.MAX_HOMOLOGY_ARITY:
        groups = lietree.relative_homology_tree_pair(args.n)
        homology = dict((str(k), groups[k].as_dict()) for k in sorted(groups))
    return {
        'command': 'trees',
        'n': args.n,
        'counts': dict((str(k), len(shapes[k])) for k in sorted(shapes)),
        'shapes': dict((str(k), [s.encode() for s in shapes[k]]) for k in sorted(shapes)),
        'homology': homology,
    }


def _lie(args, parser):
    basis = lietree.lie_basis(args.n)
    return {
        'command': 'lie',
        'n': args.n,
        'rank': factorial(args.n - 1),
        'basis': [str(b) for b in basis],
    }


def _dl(args, parser):
    spec = _presentation(args, parser)
    p = spec.prime if spec is not None else args.prime
    if p is None:
        parser.error("dl needs --prime, --spectrum or --input")
    if args.stage is not None:
        stage = args.stage
    elif spec is not None:
        stage = stagescan.report(spec).stage_bound
    else:
        stage, _ = stagescan.refined_bound_kochman(stagescan.bp(p))

    data = {
        'command': 'dl',
        'prime': p,
        'stage': stage,
        'max_lower_index': dyerlashof.max_lower_index(p, stage),
    }
    if args.class_degree is None:
        chain = dyerlashof.indecomposable_chain(p, stage)
        class_degree = chain['class_degree']
    else:
        chain = None
        class_degree = args.class_degree
    data['class_degree'] = class_degree
    data['window'] = dyerlashof.available_upper_ops(p, stage, class_degree).as_dict()
    data['operations'] = dyerlashof.operation_table(p, stage, class_degree)
    if chain is not None:
        data['chain'] = chain
    return data


def _degree_set(s, bound):
    try:
        low = s.min_positive()
    except NoPositiveElement:
        low = None
    return {
        'name': s.name,
        'generators': s.describe(),
        'gcd': s.gcd(),
        'min_positive': low,
        'members': s.enumerate_up_to(bound),
    }


def _degrees(args, parser):
    spec = _presentation(args, parser)
    if spec is None:
        parser.error("degrees needs --spectrum or --input")
    return {
        'command': 'degrees',
        'spectrum': spec.name,
        'prime': spec.prime,
        'max_degree': args.max_degree,
        'coefficients': _degree_set(spec.coeff_degrees, args.max_degree),
        'cooperations': _degree_set(spec.coop_degrees, args.max_degree),
    }


def _stage(args, parser):
    if args.n < 2:
        parser.error("stages start at n=2")
    data = {'command': 'stage'}
    data.update(stagescan.describe_stage(args.n).as_dict())
    return data


COMMANDS = {
    'report': _report,
    'kochman': _kochman,
    'trees': _trees,
    'lie': _lie,
    'dl': _dl,
    'degrees': _degrees,
    'stage': _stage,
}


def run(argv, stdout=None, stderr=None):
    """Run one command.

    :param argv: arguments without the program name
    :returns: exit code
    """
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        data = COMMANDS[args.command](args, parser)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    except GammaStageError as e:
        log.debug("%s failed: %r", argv, e)
        print("error: %s" % e, file=stderr)
        return 1

    stdout.write(WRITERS[args.format]().dump(data))
    if args.format == 'json':
        stdout.write("\n")
    return 0


def main():
    logging.basicConfig(level=logging.WARNING, stream=sys.stderr,
                        format="%(name)s: %(levelname)s: %(message)s")
    sys.exit(run(sys.argv[1:]))


if __name__ == '__main__':
    main()
