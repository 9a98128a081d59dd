import json
from abc import ABC, abstractmethod


class ReportHandler(ABC):
    def __init__(self, obj):
        assert self.accepts(obj), f"Class {self.__class__} cannot accept: {obj}"
        self._python_object = obj

    @property
    def python_object(self):
        """ Returns the internal object wrapped by this handler.

        Returns:
            (object): The internal python object.
        """
        return self._python_object

    @abstractmethod
    def primary_data(self):
        """ Resolves the result payload of the report.
            Primary data must be JSON serialisable: strings, numbers,
            booleans, lists and dicts only.

        Returns:
            Union[dict, list, str, int, bool]: The result payload.
        """
        pass

    def secondary_data(self):
        """ Resolves the certificates attached to the result.
            Results that carry a ``passed`` verdict certify themselves.

        Returns:
            List[dict]: The certificates, possibly empty.
        """
        passed = getattr(self.python_object, "passed", None)
        if passed is None:
            return []
        return [{"name": type(self.python_object).__name__, "passed": bool(passed)}]

    def text(self):
        """ Returns the canonical text printed outside of JSON mode. """
        data = self.primary_data()
        if isinstance(data, str):
            return data
        return json.dumps(data, indent=2)

    def document(self, pair=None, subcommand=None, inputs=None, certificates=None):
        """ Returns the schema-stable JSON document of this result.

        Args:
            pair (Optional[str]): The pair or algebra the result belongs to.
            subcommand (Optional[str]): The command that produced it.
            inputs (Optional[dict]): The arguments of the command.
            certificates (Optional[List[dict]]): Extra certificates to append.
        Returns:
            dict: {pair, subcommand, inputs, result, certificates}.
        """
        return {
            "pair": pair,
            "subcommand": subcommand,
            "inputs": self.prune_data(inputs or {}),
            "result": self.primary_data(),
            "certificates": list(self.secondary_data()) + list(certificates or []),
        }

    @classmethod
    @abstractmethod
    def accepts(cls, obj):
        """ Returns true if this handler can accept the specified object.

        Args:
            (obj, object): Any provided python object.
        Returns:
            bool: True if the handler can handle the provided object.
        """
        pass

    @staticmethod
    def prune_data(data, prune=None, recursive=True):
        """ Returns a copy of the input dictionary with empty values removed.

        Args:
            data (dict): An input dictionary
            prune (Optional[List[obj]]): A list of values to remove.
                Defaults to None types, empty dicts/lists and the empty string.
            recursive (bool): If true will recursively remove empty values from
                sub-dictionaries. Defaults to True.
        Returns:
            dict: A copy of the dictionary with the empty values pruned.
        """
        data = dict(data)
        if recursive:
            for key, value in data.items():
                if isinstance(value, dict):
                    data.update({
                        key: ReportHandler.prune_data(
                            value, prune=prune, recursive=recursive
                        )
                    })
        prune = prune or (None, "", [], {})
        return {k: v for (k, v) in data.items() if v not in prune}
