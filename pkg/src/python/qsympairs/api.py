""" `qsympairs` Application Programming Interface

    Provides high level entry points shared by the command line and the
    tests: loading algebras and pairs from labels and descriptors, reading
    weights, and running the certificate suites of a pair.
"""
import json
from fractions import Fraction

from qsympairs import constants, repn
from qsympairs.constants import Basis, DiagramMap
from qsympairs.errors import ValidationError
from qsympairs.involution import validate_satake
from qsympairs.logging import LOGGER
from qsympairs.qsp import (
    build_pair,
    coideal_certificate,
    presentation_relations,
    serre_defect,
    support_check,
)
from qsympairs.resource import get_pair_descriptor, load_params
from qsympairs.rootdata import cartan_init
from qsympairs.uq import algebra_init


# ----------- LOADING ----------
def datum_from_cartan(cartan):
    """ Returns the root datum named by a descriptor ``cartan`` entry or a
        command line value.

    Args:
        cartan (Union[str, dict, list]): ``"A2"``, ``"[[2,-1],[-1,2]]"``,
            ``{"series": "A", "rank": 2}``, ``{"label": "A1xA1"}`` or
            ``{"matrix": [[2, -1], [-1, 2]]}``.
    Returns:
        RootDatum: The validated datum.
    Raises:
        ValidationError: If the value names no Cartan matrix.
    """
    if isinstance(cartan, str):
        text = cartan.strip()
        if text.startswith("["):
            try:
                return cartan_init(json.loads(text))
            except json.JSONDecodeError as error:
                raise ValidationError(f"Cartan matrix {text!r} is not valid JSON: {error}")
        return cartan_init(text)
    if isinstance(cartan, list):
        return cartan_init(cartan)
    if isinstance(cartan, dict):
        if "matrix" in cartan:
            return cartan_init(cartan["matrix"])
        if "label" in cartan:
            return cartan_init(cartan["label"])
        if "series" in cartan and "rank" in cartan:
            return cartan_init(f"{cartan['series']}{cartan['rank']}")
    raise ValidationError(f"Cannot read Cartan data from {cartan!r}")


def diagram_map(datum, d):
    """ Returns a diagram automorphism as a 0-based permutation.

    Args:
        datum (RootDatum): The root datum.
        d (Union[str, list, dict]): ``"id"``, ``"flip"``, a 1-based list of
            images or a 1-based mapping.
    Returns:
        Tuple[int]: The permutation.
    """
    if d is None or d == DiagramMap.IDENTITY.value:
        return tuple(range(datum.rank))
    if d == DiagramMap.FLIP.value:
        return datum.flip()
    if isinstance(d, dict):
        images = dict(zip(range(datum.rank), range(datum.rank)))
        images.update({int(k) - 1: int(v) - 1 for k, v in d.items()})
        return tuple(images[i] for i in range(datum.rank))
    if isinstance(d, list):
        return tuple(int(v) - 1 for v in d)
    raise ValidationError(f"Cannot read the diagram map {d!r}")


def load_theta(source):
    """ Returns the descriptor and the validated Satake data of a pair source.

    Args:
        source (Union[str, dict]): A catalog key, descriptor name or path.
    Returns:
        Tuple[dict, ThetaData]: The descriptor and its Satake data.
    """
    descriptor = get_pair_descriptor(source)
    if "cartan" not in descriptor:
        raise ValidationError(f"Descriptor {descriptor.get('name')} has no cartan entry")
    datum = datum_from_cartan(descriptor["cartan"])
    pi_theta = [int(i) - 1 for i in descriptor.get("pi_theta", [])]
    d = diagram_map(datum, descriptor.get("d", DiagramMap.IDENTITY.value))
    return descriptor, validate_satake(datum, pi_theta, d)


def load_algebra(cartan=None, config=None, degree_bound=constants.DEFAULT_DEGREE_BOUND):
    """ Returns the algebra of a Cartan value or of the Cartan entry of a
        pair descriptor. Exactly one source must be given.
    """
    if (cartan is None) == (config is None):
        raise ValidationError("Give exactly one of a Cartan type and a pair descriptor")
    if cartan is not None:
        datum = datum_from_cartan(cartan)
    else:
        datum = datum_from_cartan(get_pair_descriptor(config).get("cartan"))
    return algebra_init(datum, degree_bound)


def shift_params(params):
    """ Returns a parameter block with its 1-based index keys made 0-based. """
    shifted = {}
    for kind in ("c", "s"):
        values = params.get(kind) or {}
        if not isinstance(values, dict):
            raise ValidationError(f"Parameter block {kind!r} must map indices to values")
        shifted[kind] = {int(index) - 1: value for index, value in values.items()}
    return shifted


def load_pair(source, params=None, ctx=None, degree_bound=constants.DEFAULT_DEGREE_BOUND):
    """ Returns the presentation of a pair descriptor.

    Args:
        source (Union[str, dict]): A catalog key, descriptor name or path.
        params (Optional[Union[str, dict]]): A parameter block, as JSON text,
            a file path or a dict, overriding the descriptor's own.
        ctx (Optional[AlgebraContext]): An algebra to reuse.
        degree_bound (int): The completion degree of a new algebra.
    Returns:
        PairPresentation: The constructed coideal subalgebra.
    """
    descriptor, theta_data = load_theta(source)
    block = dict(descriptor.get("params") or {})
    if params is not None:
        block.update(params if isinstance(params, dict) else load_params(params))
    shifted = shift_params(block)
    ctx = ctx or algebra_init(theta_data.datum, degree_bound)
    return build_pair(
        theta_data, ctx, c=shifted["c"], s=shifted["s"],
        name=descriptor.get("name", "custom"),
    )


# ----------- ARGUMENTS ----------
def _number(text):
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ValidationError(f"{text!r} is not a rational number")


def _normal(value):
    return int(value) if value.denominator == 1 else value


def parse_weight(text, datum):
    """ Returns a weight in root coordinates from tagged text: ``r:1,0`` in
        simple roots or ``w:1,0`` in fundamental weights.

    Raises:
        ValidationError: Without a basis tag or with the wrong length.
    """
    tag, _, body = str(text).partition(":")
    try:
        basis = Basis(tag.strip().lower())
    except ValueError:
        raise ValidationError(f"Weight {text!r} needs a basis tag, r: or w:")
    vector = tuple(_normal(_number(c)) for c in body.split(","))
    if len(vector) != datum.rank:
        raise ValidationError(f"Weight {text!r} must have {datum.rank} coordinates")
    if basis is Basis.WEIGHT:
        return datum.weight_to_root(vector)
    return vector


def parse_vector(text, rank):
    """ Returns an integer lattice vector from comma separated text, with an
        optional ``r:`` tag.
    """
    body = str(text).split(":", 1)[-1]
    values = tuple(_number(c) for c in body.split(","))
    if len(values) != rank or any(v.denominator != 1 for v in values):
        raise ValidationError(f"{text!r} is not an integer vector with {rank} entries")
    return tuple(int(v) for v in values)


def parse_indices(text, rank):
    """ Returns 0-based indices from 1-based comma separated text. """
    text = str(text or "").strip()
    if not text:
        return ()
    try:
        indices = tuple(int(c) - 1 for c in text.split(","))
    except ValueError:
        raise ValidationError(f"{text!r} is not a list of indices")
    if any(not 0 <= i < rank for i in indices):
        raise ValidationError(f"Indices {text!r} must lie between 1 and {rank}")
    return indices


# ----------- SUITES ----------
def coideal_certificates(pair):
    """ Returns the coideal certificate of every generator of a pair. """
    return [coideal_certificate(pair, i) for i in pair.theta_data.outside()]


def serre_defects(pair):
    """ Returns the deformed Serre relation of every ordered pair i != j
        outside pi_theta.
    """
    outside = pair.theta_data.outside()
    return [serre_defect(pair, i, j) for i in outside for j in outside if i != j]


def support_checks(pair):
    """ Returns the support check of every ordered pair i != j. """
    rank = pair.ctx.rank
    return [support_check(pair, i, j) for i in range(rank) for j in range(rank) if i != j]


def pair_report(pair):
    """ Returns the full presentation report of a pair: generators,
        coideal certificates, relation checks and deformed Serre relations.

    Returns:
        Tuple[dict, List[dict]]: The report and its certificates.
    """
    certificates = coideal_certificates(pair)
    relations = presentation_relations(pair)
    defects = serre_defects(pair)
    report = pair.to_dict()
    report["theta"] = pair.theta_data.to_dict()
    report["relations"] = [relation.to_dict() for relation in defects]
    report["presentation_checks"] = relations.to_dict()
    summary = [
        {"name": f"coideal B{c.index + 1}", "passed": c.passed} for c in certificates
    ]
    summary.append({"name": "presentation relations", "passed": relations.passed})
    LOGGER.info(f"Pair report of {pair.name}: {len(certificates)} certificates")
    return report, summary


def spherical(pair, weight, budget=constants.DEFAULT_MODULE_BUDGET):
    """ Returns the spherical check of L(weight) for a pair. """
    module = repn.simple_module(pair.ctx, weight, budget)
    return repn.spherical_check(module, pair)


def unitarity(pair, weight, budget=constants.DEFAULT_MODULE_BUDGET):
    """ Returns the real form scaling of a pair and the unitarity and
        complete reducibility checks of L(weight) under it.

    Returns:
        Tuple[ScalingResult, UnitaryReport, ReducibilityWitness]: The checks.
    """
    module = repn.simple_module(pair.ctx, weight, budget)
    scaling = repn.find_real_form_scaling(pair)
    return (
        scaling,
        repn.unitary_check(module, pair, scaling),
        repn.complete_reducibility_witness(module, pair, scaling),
    )
