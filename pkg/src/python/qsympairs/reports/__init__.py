from qsympairs.reports.base import ReportHandler
from qsympairs.reports.algebra import (
    ElementHandler,
    ScalarHandler,
    TensorHandler,
    ValueHandler,
    VectorHandler,
)
from qsympairs.reports.pairs import (
    CertificateHandler,
    PresentationHandler,
    RelationHandler,
    RestrictedHandler,
    ThetaHandler,
)
from qsympairs.reports.modules import (
    InvariantHandler,
    ModuleCertificateHandler,
    ModuleHandler,
    ScalingHandler,
    SphericalHandler,
)

# Checked in order; ValueHandler catches plain JSON values last
HANDLERS = (
    ElementHandler,
    TensorHandler,
    ScalarHandler,
    VectorHandler,
    PresentationHandler,
    ThetaHandler,
    RelationHandler,
    CertificateHandler,
    RestrictedHandler,
    ModuleHandler,
    InvariantHandler,
    ScalingHandler,
    SphericalHandler,
    ModuleCertificateHandler,
    ValueHandler,
)


def get_handler(obj):
    """ Returns the first report handler that accepts the object.

    Args:
        obj (object): Any result produced by the api.
    Returns:
        ReportHandler: The handler wrapping the object.
    Raises:
        TypeError: If no handler accepts the object.
    """
    for handler in HANDLERS:
        if handler.accepts(obj):
            return handler(obj)
    raise TypeError(f"No report handler accepts {type(obj).__name__}")
