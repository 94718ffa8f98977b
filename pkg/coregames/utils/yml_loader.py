import os
import yaml

from jinja2 import Template
from io import StringIO

try:
    from yaml import CSafeLoader as base_loader
except ImportError:
    from yaml import SafeLoader as base_loader

"""
Extend the loader class to be able to reference files in .yaml files.
Adapted from https://stackoverflow.com/questions/528281/how-can-i-include-a-yaml-file-inside-another
"""


class Loader(base_loader):
    """YAML loader rendering the stream through Jinja2 before parsing.

    Used for configuration files and for instance documents (JSON is a subset
    of YAML, so plain JSON documents load unchanged). Streams without a name
    (e.g. standard input) resolve includes against the working directory.
    """

    def __init__(self, stream):
        name = getattr(stream, "name", None)
        if isinstance(name, str) and os.path.exists(name):
            self._root = os.path.split(os.path.abspath(name))[0]
        else:
            self._root = os.getcwd()
        ctx = {"env": os.environ}
        yaml_stream = StringIO(Template(stream.read()).render(ctx))
        yaml_stream.name = name
        super().__init__(yaml_stream)

    def scalar_from_file(self, node):
        filename = os.path.join(self._root, self.construct_scalar(node))
        with open(filename, "r") as f:
            return f.read()

    def include_other_yml(self, node):
        filename = os.path.join(self._root, self.construct_scalar(node))
        with open(filename, "r") as f:
            return yaml.load(f, Loader)


Loader.add_constructor("!text_from_file", Loader.scalar_from_file)
Loader.add_constructor("!yml_from_file", Loader.include_other_yml)


def load_yml(file_path: str):
    "Load a (Jinja2-templated) YAML or JSON file."
    with open(file_path, "r") as f:
        return yaml.load(f, Loader=Loader)
