import json
from pathlib import Path

from cachetools import cached

from qsympairs.constants import QSYMPAIRS_PAIRS, QSYMPAIRS_RESOURCES
from qsympairs.errors import ValidationError


@cached(cache={})
def get_json_resource(filename):
    """ Returns the parsed content of a JSON file in the resources directory.

    Args:
        filename (str): A path relative to the resources directory, with or
            without the ``.json`` suffix.
    Returns:
        Union[dict, list]: The parsed JSON content.
    Raises:
        ValidationError: If the resource does not exist or is not JSON.
    """
    filename = filename if filename.endswith(".json") else filename + ".json"
    path = QSYMPAIRS_RESOURCES.joinpath(filename)
    if not path.exists():
        raise ValidationError(f"No such resource: {filename}")
    with open(path, "r") as infile:
        try:
            return json.load(infile)
        except json.JSONDecodeError as error:
            raise ValidationError(f"Resource {filename} is not valid JSON: {error}")


def get_catalog():
    """ Returns the catalog of named pairs.

    Returns:
        Dict[str, str]: Catalog keys (``P1``...) mapped to descriptor names.
    """
    return get_json_resource("catalog.json")


def list_pair_names():
    """ Returns the names of every bundled pair descriptor. """
    return sorted(path.stem for path in QSYMPAIRS_PAIRS.glob("*.json"))


def get_pair_descriptor(source):
    """ Returns a pair descriptor from a file path, a catalog key or a
        descriptor name.

    Args:
        source (Union[str, dict, pathlib.Path]): ``"P3"``, ``"a2split"``, a
            path to a JSON file, or an already loaded descriptor.
    Returns:
        dict: The descriptor, with a ``name`` entry.
    Raises:
        ValidationError: If the source cannot be resolved.
    """
    if isinstance(source, dict):
        return dict(source)
    text = str(source)
    path = Path(text)
    if path.suffix == ".json" and path.exists():
        with open(path, "r") as infile:
            try:
                descriptor = json.load(infile)
            except json.JSONDecodeError as error:
                raise ValidationError(f"Descriptor {text} is not valid JSON: {error}")
        descriptor.setdefault("name", path.stem)
        return descriptor
    name = get_catalog().get(text.upper(), path.stem if path.suffix == ".json" else text)
    if name not in list_pair_names():
        raise ValidationError(
            f"Unknown pair {text!r}; expected a catalog key, one of "
            f"{list_pair_names()}, or a descriptor path"
        )
    descriptor = dict(get_json_resource(f"pairs/{name}"))
    descriptor.setdefault("name", name)
    return descriptor


def load_params(source):
    """ Returns a parameter block given as JSON text or a JSON file path.

    Raises:
        ValidationError: If the text is neither.
    """
    if source is None:
        return {}
    path = Path(source)
    if path.suffix == ".json" and path.exists():
        with open(path, "r") as infile:
            source = infile.read()
    try:
        params = json.loads(source)
    except json.JSONDecodeError as error:
        raise ValidationError(f"Parameters are not valid JSON: {error}")
    if not isinstance(params, dict):
        raise ValidationError("Parameters must be a JSON object")
    return params
