from fractions import Fraction

from qsympairs.hopf import TensorElement
from qsympairs.printing import format_element, format_scalar, format_tensor, format_vector
from qsympairs.qfield import is_qrat
from qsympairs.reports.base import ReportHandler
from qsympairs.uq import Element


class ElementHandler(ReportHandler):

    def primary_data(self):
        """ Returns the canonical text of the element. """
        return format_element(self.python_object)

    @classmethod
    def accepts(cls, obj):
        return isinstance(obj, Element)


class TensorHandler(ReportHandler):

    def primary_data(self):
        """ Returns the canonical text of the tensor, legs joined by ``(x)``. """
        return format_tensor(self.python_object)

    @classmethod
    def accepts(cls, obj):
        return isinstance(obj, TensorElement)


class ScalarHandler(ReportHandler):

    def primary_data(self):
        """ Returns the canonical text of a coefficient or a rational number. """
        value = self.python_object
        if isinstance(value, Fraction):
            return str(value)
        return format_scalar(value)

    @classmethod
    def accepts(cls, obj):
        return is_qrat(obj)


class VectorHandler(ReportHandler):

    def primary_data(self):
        """ Returns a lattice vector or a bidegree as text. """
        return format_vector(self.python_object)

    @classmethod
    def accepts(cls, obj):
        return isinstance(obj, tuple) and all(isinstance(c, (int, Fraction)) for c in obj)


class ValueHandler(ReportHandler):
    """ Plain JSON values: booleans, strings, lists and dicts. """

    def primary_data(self):
        return self.python_object

    def text(self):
        value = self.python_object
        if isinstance(value, bool):
            return "true" if value else "false"
        return super().text()

    @classmethod
    def accepts(cls, obj):
        return isinstance(obj, (bool, str, list, dict))
