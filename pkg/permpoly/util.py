import os
from dataclasses import dataclass
from functools import lru_cache

import yaml

import permpoly

pjoin = os.path.join

LONG_SCANS_VARIABLE = "PERMPOLY_LONG_SCANS"


def permpoly_path(path):
    """Returns the absolute path for the given path."""
    return pjoin(permpoly.__path__[0], path)


@dataclass
class YamlLoader:
    infile: str

    def load(self) -> dict:
        """Loads and returns data from a YAML file."""
        with open(self.infile, "r") as f:
            data = yaml.load(f, Loader=yaml.FullLoader)
            return data


@dataclass
class PermpolyConfiguration:
    """
    Object used to read budgets, sample sizes and seeds from a .yml file.

    After the object is initiated, one can get a whole section or a single
    value by calling the get() method:
    >>> config = PermpolyConfiguration()
    >>> config.get("sampling")
    >>> config.get("sampling", "seed")

    If the section or key is not recognized, get() will raise an AssertionError.
    """

    infile: str = permpoly_path("config/defaults.yml")
    data: dict = None

    def __post_init__(self) -> None:
        self.data = YamlLoader(self.infile).load()

    def _check_section_is_valid(self, section: str) -> None:
        """Internal function to check if the section name is valid"""
        assert (
            section in self.data.keys()
        ), f"Section: {section} is not recognized in {self.infile}"

    def get(self, section: str, key: str = None):
        """Getter for a configuration section, or for one key within it."""
        self._check_section_is_valid(section)
        if key is None:
            return self.data[section]
        assert (
            key in self.data[section]
        ), f"Key: {key} is not recognized in section {section}"
        return self.data[section][key]

    @property
    def long_scans(self) -> bool:
        """Whether long-running exhaustive scans were unlocked via the environment."""
        return os.environ.get(LONG_SCANS_VARIABLE) == "1"

    def enumeration_budget(self) -> int:
        """Largest number of permutations an exhaustive scan may enumerate."""
        key = "long_max_permutations" if self.long_scans else "max_permutations"
        return int(self.get("hermite_scan", key))


@lru_cache(maxsize=None)
def default_configuration() -> PermpolyConfiguration:
    return PermpolyConfiguration()
