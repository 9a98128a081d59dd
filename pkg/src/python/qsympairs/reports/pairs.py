from qsympairs.classical import ClassicalReport
from qsympairs.involution import ThetaData
from qsympairs.printing import format_vector
from qsympairs.qsp import (
    CoidealCertificate,
    IndependenceReport,
    PairPresentation,
    Relation,
    RelationChecks,
    ShapeReport,
    SpecializationReport,
    SupportCheck,
)
from qsympairs.reports.base import ReportHandler
from qsympairs.rootdata import RestrictedSystem


class SerialisedHandler(ReportHandler):
    """ Results that describe themselves through ``to_dict``. """

    # The result classes accepted by a concrete handler
    REPORT_TYPES = ()

    def primary_data(self):
        return self.python_object.to_dict()

    @classmethod
    def accepts(cls, obj):
        return bool(cls.REPORT_TYPES) and isinstance(obj, cls.REPORT_TYPES)


class PresentationHandler(SerialisedHandler):
    REPORT_TYPES = (PairPresentation,)

    def text(self):
        pair = self.python_object
        return "\n".join(f"{name} = {b}" for name, b in pair.names().items())


class ThetaHandler(SerialisedHandler):
    REPORT_TYPES = (ThetaData,)


class RelationHandler(SerialisedHandler):
    REPORT_TYPES = (Relation,)

    def text(self):
        return self.python_object.text()


class CertificateHandler(SerialisedHandler):
    REPORT_TYPES = (
        CoidealCertificate,
        SupportCheck,
        SpecializationReport,
        RelationChecks,
        IndependenceReport,
        ShapeReport,
        ClassicalReport,
    )


class RestrictedHandler(ReportHandler):

    def primary_data(self):
        """ Resolves the restricted roots with their multiplicities, the
            classified components and the one-parameter index pairs.

        Returns:
            dict: The restricted root system.
        """
        system = self.python_object
        return {
            "labels": system.labels,
            "reduced": system.is_reduced,
            "roots": [
                {"root": format_vector(root), "multiplicity": system.multiplicities[root]}
                for root in system.roots
            ],
            "components": [
                {
                    "label": component.label,
                    "simple": [format_vector(system.simple[k]) for k in component.simple],
                    "cartan": [list(map(str, row)) for row in component.cartan],
                }
                for component in system.components
            ],
            "variation_pairs": [[r + 1, s + 1] for r, s in system.variation_pairs],
        }

    def text(self):
        system = self.python_object
        pairs = ", ".join(f"{{{r + 1},{s + 1}}}" for r, s in system.variation_pairs)
        text = " + ".join(system.labels) or "empty"
        return f"{text}; variation pairs: {pairs}" if pairs else text

    @classmethod
    def accepts(cls, obj):
        return isinstance(obj, RestrictedSystem)
