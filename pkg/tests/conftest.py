# Encoding: utf8
from os.path import join, dirname, abspath
import sys ; sys.path.insert(0, join(dirname(dirname(abspath(__file__))), "src"))

import random
from   fractions import Fraction
import pytest

def pytest_configure( config ):
	config.addinivalue_line("markers", "slow: end-to-end runs taking minutes")

@pytest.fixture
def rng():
	return random.Random(20261018)

@pytest.fixture
def legendre2():
	from twistcert.eccore import LegendreCurve
	return LegendreCurve(Fraction(2))

# EOF - vim: tw=80 ts=4 sw=4 noet
