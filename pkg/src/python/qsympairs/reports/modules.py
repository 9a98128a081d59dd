from qsympairs.reports.pairs import SerialisedHandler
from qsympairs.repn import (
    InvariantSpace,
    PositivityReport,
    ReducibilityWitness,
    ScalingResult,
    SimpleModule,
    SphericalReport,
    UnitaryReport,
)


class ModuleHandler(SerialisedHandler):
    REPORT_TYPES = (SimpleModule,)

    def text(self):
        module = self.python_object
        return f"dim L({', '.join(map(str, module.highest))}) = {module.dimension}"


class InvariantHandler(SerialisedHandler):
    REPORT_TYPES = (InvariantSpace,)

    def secondary_data(self):
        # at most one invariant line in a simple module
        return [{"name": "multiplicity_at_most_one", "passed": self.python_object.dimension <= 1}]

    def text(self):
        return str(self.python_object.dimension)


class ScalingHandler(SerialisedHandler):
    REPORT_TYPES = (ScalingResult,)

    def secondary_data(self):
        return []

    def text(self):
        scaling = self.python_object
        if not scaling.found:
            return "NotFound"
        return ", ".join(f"c{i + 1} = s^{e}" for i, e in sorted(scaling.exponents.items()))


class ModuleCertificateHandler(SerialisedHandler):
    REPORT_TYPES = (PositivityReport, UnitaryReport, ReducibilityWitness)

    def text(self):
        return "true" if self.python_object.passed else "false"


class SphericalHandler(SerialisedHandler):
    REPORT_TYPES = (SphericalReport,)

    def text(self):
        return "true" if self.python_object.spherical else "false"
