import copy
import json
import os
import random
import string

import yaml
from hypothesis import strategies as st

from permpoly.polyfn import Polynomial
from permpoly.util import PermpolyConfiguration

SMALL_PRIMES = (2, 3, 5, 7, 11, 13)
ODD_PRIMES = (3, 5, 7, 11, 13)
PRIMES_TO_97 = tuple(n for n in range(2, 98) if all(n % d for d in range(2, n)))

# Largest prime below 2**64
LARGEST_WORD_PRIME = 18446744073709551557


def random_id(length=16):
    """Random string ID for naming temporary files etc"""
    return "".join(random.choices(string.ascii_lowercase, k=length))


def make_tmp_dir():
    """Creation of randomly named working directories for tests"""
    wdir = "/tmp/tmp_" + random_id(32)
    if os.path.exists(wdir):
        return make_tmp_dir()
    os.makedirs(wdir)
    return wdir


def write_json(directory, data):
    """Dump data into a randomly named JSON file and return its path"""
    path = os.path.join(directory, random_id() + ".json")
    with open(path, "w") as f:
        json.dump(data, f)
    return path


def polynomials(p, max_degree=12):
    """Hypothesis strategy for polynomials over Z_p with arbitrary integer input"""
    return st.lists(
        st.integers(min_value=-(10 ** 6), max_value=10 ** 6), max_size=max_degree + 1
    ).map(lambda coeffs: Polynomial(coeffs, p))


def polynomials_over_small_primes(count=1, max_degree=12):
    """Strategy for a tuple of `count` polynomials sharing a random small prime"""
    return st.sampled_from(SMALL_PRIMES).flatmap(
        lambda p: st.tuples(*[polynomials(p, max_degree) for _ in range(count)])
    )


def make_configuration(overrides):
    """
    Write a copy of the default configuration with some values replaced.

    `overrides` maps section names to dicts of replacement values.
    """
    data = copy.deepcopy(PermpolyConfiguration().data)
    for section, values in overrides.items():
        data[section].update(values)

    path = os.path.join(make_tmp_dir(), "config.yml")
    with open(path, "w") as f:
        yaml.dump(data, f)
    return PermpolyConfiguration(path)
