"""qsympairs: exact quantum symmetric pair computations.

Usage:
  qsympairs nf <expr> (--cartan=<type> | --config=<pair>) [options]
  qsympairs coprod <expr> (--cartan=<type> | --config=<pair>) [options]
  qsympairs antipode <expr> (--cartan=<type> | --config=<pair>) [options]
  qsympairs counit <expr> (--cartan=<type> | --config=<pair>) [options]
  qsympairs kappa <expr> (--cartan=<type> | --config=<pair>) [options]
  qsympairs ad <a> <b> (--cartan=<type> | --config=<pair>) [options]
  qsympairs adr <a> <b> (--cartan=<type> | --config=<pair>) [options]
  qsympairs weight <expr> (--cartan=<type> | --config=<pair>) [options]
  qsympairs bideg <expr> (--cartan=<type> | --config=<pair>) [options]
  qsympairs tip <expr> (--cartan=<type> | --config=<pair>) [options]
  qsympairs proj <expr> (--lambda=<vec> --mu=<vec> | --coset=<vec>) (--cartan=<type> | --config=<pair>) [options]
  qsympairs flocal --lambda=<vec> (--cartan=<type> | --config=<pair>) [options]
  qsympairs parabolic --pi-prime=<indices> --tuple=<indices> --j=<index> (--cartan=<type> | --config=<pair>) [options]
  qsympairs build-pair --config=<pair> [options]
  qsympairs coideal-check --config=<pair> [options]
  qsympairs serre-defect <i> <j> --config=<pair> [options]
  qsympairs support-check <i> <j> --config=<pair> [options]
  qsympairs lemma73 <i> <j> --config=<pair> [options]
  qsympairs specialize --config=<pair> [options]
  qsympairs sequence <i> --config=<pair> [options]
  qsympairs restricted-roots --config=<pair> [options]
  qsympairs spherical --weight=<weight> --config=<pair> [options]
  qsympairs simple --weight=<weight> (--cartan=<type> | --config=<pair>) [--invariants] [options]
  qsympairs shapovalov --weight=<weight> (--cartan=<type> | --config=<pair>) [options]
  qsympairs unitary --weight=<weight> --config=<pair> [options]
  qsympairs -h | --help

Options:
  -h --help             Show this screen.
  --cartan=<type>       A type label such as A2 or A1xA1, or a Cartan matrix as JSON.
  --config=<pair>       A pair descriptor: catalog key (P1-P5), bundled name or JSON path.
  --params=<params>     A parameter block as JSON text or a JSON file path.
  --json                Print the JSON report instead of canonical text.
  --max-degree=<d>      The degree bound of the rewriting system [default: 12].
  --budget=<n>          The largest total Verma weight space size [default: 4000].
  --side=<side>         Parabolic side, x or y [default: y].
  --verbose             Log at DEBUG level.

Weights are tagged with their basis: r:1,0 in simple roots, w:1,0 in
fundamental weights. Indices are 1-based.
"""
import json
import logging
import sys
from dataclasses import dataclass, field

from docopt import DocoptExit, docopt

from qsympairs import api, repn
from qsympairs.adjoint import adjoint_left, adjoint_right
from qsympairs.constants import ExitCode, Side
from qsympairs.errors import ParseError, QSymPairsError, ValidationError, exit_code_for
from qsympairs.filtrations import bidegree, project_coset, project_trihomog, tip
from qsympairs.hopf import antipode, coproduct, counit, kappa
from qsympairs.involution import admissible_sequence
from qsympairs.logging import LOGGER, set_level
from qsympairs.parser import parse_element
from qsympairs.qsp import (
    parabolic_generator,
    parabolic_shape_check,
    serre_defect,
    specialize_pair,
    support_check,
)
from qsympairs.reports import get_handler
from qsympairs.rootdata import flocal_torus_test, restricted_roots
from qsympairs.uq import weight

USAGE = __doc__

# Subcommand name -> function(Invocation) returning (result, certificates)
COMMANDS = {}


def command(name):
    def register(function):
        COMMANDS[name] = function
        return function
    return register


def _integer(text, name):
    try:
        return int(text)
    except (TypeError, ValueError):
        raise ValidationError(f"{name} must be an integer, got {text!r}")


@dataclass
class Invocation:
    """ One parsed command line with the algebra and pair it needs, built
        on first use.
    """
    arguments: dict
    _ctx: object = field(default=None, repr=False)
    _pair: object = field(default=None, repr=False)

    @property
    def subcommand(self):
        return next(name for name in COMMANDS if self.arguments.get(name))

    @property
    def degree_bound(self):
        return _integer(self.arguments["--max-degree"], "--max-degree")

    @property
    def budget(self):
        return _integer(self.arguments["--budget"], "--budget")

    @property
    def ctx(self):
        if self._ctx is None:
            self._ctx = api.load_algebra(
                cartan=self.arguments.get("--cartan"),
                config=self.arguments.get("--config"),
                degree_bound=self.degree_bound,
            )
        return self._ctx

    @property
    def pair(self):
        if self._pair is None:
            if not self.arguments.get("--config"):
                raise ValidationError(f"{self.subcommand} needs a pair descriptor (--config)")
            self._pair = api.load_pair(
                self.arguments["--config"],
                params=self.arguments.get("--params"),
                ctx=self._ctx,
                degree_bound=self.degree_bound,
            )
            self._ctx = self._pair.ctx
        return self._pair

    @property
    def source(self):
        if self._pair is not None:
            return self._pair.name
        return self.arguments.get("--config") or self.arguments.get("--cartan")

    def element(self, key="<expr>"):
        return parse_element(self.arguments[key], self.ctx)

    def index(self, key):
        value = _integer(self.arguments[key], key) - 1
        if not 0 <= value < self.ctx.rank:
            raise ValidationError(f"{key} must lie between 1 and {self.ctx.rank}")
        return value

    def weight(self):
        return api.parse_weight(self.arguments["--weight"], self.ctx.datum)

    def vector(self, key):
        return api.parse_vector(self.arguments[key], self.ctx.rank)

    def inputs(self):
        """ Returns the arguments that were given, without the command words. """
        return {
            key.strip("-<>"): value for key, value in self.arguments.items()
            if key not in COMMANDS and value not in (None, False) and key != "--help"
        }


# ----------- ALGEBRA ----------
@command("nf")
def _nf(invocation):
    return invocation.element(), []


@command("coprod")
def _coprod(invocation):
    return coproduct(invocation.element()), []


@command("antipode")
def _antipode(invocation):
    return antipode(invocation.element()), []


@command("counit")
def _counit(invocation):
    return counit(invocation.element()), []


@command("kappa")
def _kappa(invocation):
    return kappa(invocation.element()), []


@command("ad")
def _ad(invocation):
    return adjoint_left(invocation.element("<a>"), invocation.element("<b>")), []


@command("adr")
def _adr(invocation):
    return adjoint_right(invocation.element("<a>"), invocation.element("<b>")), []


@command("weight")
def _weight(invocation):
    return weight(invocation.element()), []


@command("bideg")
def _bideg(invocation):
    return bidegree(invocation.element()), []


@command("tip")
def _tip(invocation):
    return tip(invocation.element()), []


@command("proj")
def _proj(invocation):
    element = invocation.element()
    if invocation.arguments.get("--coset"):
        return project_coset(element, invocation.vector("--coset")), []
    lam, mu = invocation.vector("--lambda"), invocation.vector("--mu")
    return project_trihomog(element, lam, mu), []


@command("flocal")
def _flocal(invocation):
    return flocal_torus_test(invocation.vector("--lambda"), invocation.ctx.datum), []


@command("parabolic")
def _parabolic(invocation):
    ctx, arguments = invocation.ctx, invocation.arguments
    pi_prime = api.parse_indices(arguments["--pi-prime"], ctx.rank)
    indices = api.parse_indices(arguments["--tuple"], ctx.rank)
    j = invocation.index("--j")
    try:
        side = Side(str(arguments["--side"]).lower())
    except ValueError:
        raise ValidationError(f"--side must be x or y, got {arguments['--side']!r}")
    shape = parabolic_shape_check(ctx, pi_prime, indices, j, side)
    certificates = [{"name": "coproduct shape", "passed": shape.passed}]
    return parabolic_generator(ctx, pi_prime, indices, j, side), certificates


# ----------- PAIRS ----------
@command("build-pair")
def _build_pair(invocation):
    return api.pair_report(invocation.pair)


@command("coideal-check")
def _coideal_check(invocation):
    certificates = api.coideal_certificates(invocation.pair)
    summary = [{"name": f"coideal B{c.index + 1}", "passed": c.passed} for c in certificates]
    return [c.to_dict() for c in certificates], summary


@command("serre-defect")
def _serre_defect(invocation):
    pair = invocation.pair
    relation = serre_defect(pair, invocation.index("<i>"), invocation.index("<j>"))
    return relation, [{"name": "relation holds", "passed": relation.verify(pair)}]


@command("support-check")
@command("lemma73")
def _support_check(invocation):
    return support_check(invocation.pair, invocation.index("<i>"), invocation.index("<j>")), []


@command("specialize")
def _specialize(invocation):
    return specialize_pair(invocation.pair), []


@command("sequence")
def _sequence(invocation):
    theta_data = invocation.pair.theta_data
    i = invocation.index("<i>")
    indices, powers = admissible_sequence(theta_data, i)
    return {
        "i": i + 1,
        "p": theta_data.p[i] + 1,
        "indices": [k + 1 for k in indices],
        "powers": list(powers),
        "m": theta_data.m(i),
    }, []


@command("restricted-roots")
def _restricted_roots(invocation):
    theta_data = invocation.pair.theta_data
    return restricted_roots(theta_data.datum, theta_data.theta), []


# ----------- MODULES ----------
@command("spherical")
def _spherical(invocation):
    return api.spherical(invocation.pair, invocation.weight(), invocation.budget), []


@command("simple")
def _simple(invocation):
    module = repn.simple_module(invocation.ctx, invocation.weight(), invocation.budget)
    failures = module.verify_relations()
    certificates = [{"name": "defining relations", "passed": not failures}]
    if invocation.arguments.get("--invariants"):
        return repn.invariants(module, invocation.pair), certificates
    return module, certificates


@command("shapovalov")
def _shapovalov(invocation):
    module = repn.simple_module(invocation.ctx, invocation.weight(), invocation.budget)
    return repn.shapovalov_positivity(module), []


@command("unitary")
def _unitary(invocation):
    scaling, report, witness = api.unitarity(invocation.pair, invocation.weight(), invocation.budget)
    certificates = [{"name": "complete reducibility", "passed": witness.passed}]
    if not scaling.found:
        LOGGER.warning("No real form scaling; unitarity is not established")
    return report, certificates


# ----------- ENTRY POINT ----------
def _emit(invocation, result, certificates, as_json):
    handler = get_handler(result)
    if as_json:
        document = handler.document(
            pair=invocation.source,
            subcommand=invocation.subcommand,
            inputs=invocation.inputs(),
            certificates=certificates,
        )
        print(json.dumps(document, indent=2))
        return document["certificates"]
    print(handler.text())
    return list(handler.secondary_data()) + list(certificates)


def run(argv=None):
    """ Runs one command line and returns its exit code.

    Args:
        argv (Optional[List[str]]): The arguments, without the program name.
            Defaults to sys.argv[1:].
    Returns:
        int: 0 on success, 1 for invalid input, 2 when a budget is exceeded
            and 3 when a computed result contradicts a proven property.
    """
    try:
        arguments = docopt(USAGE, argv=argv)
    except DocoptExit as error:
        print(str(error), file=sys.stderr)
        return int(ExitCode.VALIDATION)
    except SystemExit:
        return int(ExitCode.SUCCESS)
    if arguments.get("--verbose"):
        set_level(logging.DEBUG)
    invocation = Invocation(arguments)
    subcommand = invocation.subcommand
    LOGGER.info(f"Running {subcommand} on {invocation.source}")
    try:
        result, certificates = COMMANDS[subcommand](invocation)
        emitted = _emit(invocation, result, certificates, arguments.get("--json"))
    except ParseError as error:
        print(f"error: {error}", file=sys.stderr)
        pointer = error.pointer()
        if pointer:
            print(pointer, file=sys.stderr)
        return exit_code_for(error)
    except QSymPairsError as error:
        print(f"error: {error}", file=sys.stderr)
        return exit_code_for(error)
    except AssertionError as error:
        LOGGER.error(f"{subcommand} broke an internal invariant: {error}")
        print(f"error: {error}", file=sys.stderr)
        return int(ExitCode.INVARIANT)
    failed = [c["name"] for c in emitted if not c.get("passed", True)]
    if failed:
        LOGGER.error(f"{subcommand} failed the certificates {failed}")
        return int(ExitCode.INVARIANT)
    LOGGER.info(f"Finished {subcommand}")
    return int(ExitCode.SUCCESS)


def main():
    sys.exit(run())
