""" Unit test cases for the report handlers that turn api results into
    canonical text and JSON documents.
"""
from fractions import Fraction

import pytest
from qsympairs.hopf import coproduct
from qsympairs.qfield import Q
from qsympairs.qsp import coideal_certificate, serre_defect
from qsympairs.reports import (
    CertificateHandler,
    ElementHandler,
    PresentationHandler,
    RelationHandler,
    ReportHandler,
    RestrictedHandler,
    ScalarHandler,
    TensorHandler,
    ValueHandler,
    VectorHandler,
    get_handler,
)
from qsympairs.rootdata import restricted_roots


def test_handler_lookup(a1):
    assert isinstance(get_handler(a1.x(0)), ElementHandler)
    assert isinstance(get_handler(coproduct(a1.x(0))), TensorHandler)
    assert isinstance(get_handler(Q), ScalarHandler)
    assert isinstance(get_handler((1, Fraction(1, 2))), VectorHandler)
    assert isinstance(get_handler(True), ValueHandler)
    with pytest.raises(TypeError):
        get_handler(object())

def test_handler_text(a1):
    assert get_handler(a1.x(0) * Q).text() == "q * x1"
    assert get_handler(coproduct(a1.x(0))).text() == "x1 (x) 1 + t1 (x) x1"
    assert get_handler(Fraction(3, 2)).text() == "3/2"
    assert get_handler((1, Fraction(1, 2))).text() == "[1, 1/2]"
    assert get_handler(False).text() == "false"

def test_pair_handlers(a1split, a2split):
    handler = get_handler(a1split)
    assert isinstance(handler, PresentationHandler)
    assert handler.text() == "B1 = y1 t1 + q^-2 * x1"
    assert handler.primary_data()["generators"] == {"B1": "y1 t1 + q^-2 * x1"}
    relation = get_handler(serre_defect(a2split, 0, 1))
    assert isinstance(relation, RelationHandler)
    assert relation.text() == "q^-1 * B2"

def test_certificate_handler(a1split):
    handler = get_handler(coideal_certificate(a1split, 0))
    assert isinstance(handler, CertificateHandler)
    assert handler.secondary_data() == [{"name": "CoidealCertificate", "passed": True}]
    assert handler.primary_data()["index"] == 1

def test_restricted_handler(a2flip):
    system = restricted_roots(a2flip.ctx.datum, a2flip.theta_data.theta)
    handler = get_handler(system)
    assert isinstance(handler, RestrictedHandler)
    assert handler.text() == "BC1; variation pairs: {1,2}"
    assert handler.primary_data()["reduced"] is False

def test_document_keys(a1):
    document = get_handler(a1.x(0)).document(
        pair="A1", subcommand="nf", inputs={"expr": "x1", "weight": None},
    )
    assert set(document) == {"pair", "subcommand", "inputs", "result", "certificates"}
    assert document["inputs"] == {"expr": "x1"}
    assert document["result"] == "x1"
    assert document["certificates"] == []

def test_document_appends_certificates():
    extra = [{"name": "extra", "passed": True}]
    assert get_handler(True).document(certificates=extra)["certificates"] == extra

def test_prune_data():
    data = {"a": 1, "b": None, "c": {"d": [], "e": "x"}, "f": ""}
    assert ReportHandler.prune_data(data) == {"a": 1, "c": {"e": "x"}}
    assert ReportHandler.prune_data(data, recursive=False) == {"a": 1, "c": {"d": [], "e": "x"}}
    assert ReportHandler.prune_data({"a": 0, "b": 1}, prune=[0]) == {"b": 1}
