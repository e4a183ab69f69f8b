#!/usr/bin/python
# Encoding: utf8
# -----------------------------------------------------------------------------
# Project   : TwistCert
# -----------------------------------------------------------------------------
# Author    : TwistCert contributors
# -----------------------------------------------------------------------------
# License   : GNU Lesser General Public License
# -----------------------------------------------------------------------------
# Creation  : 03-Oct-2026
# Last mod  : 18-Oct-2026
# -----------------------------------------------------------------------------

from setuptools import setup

PROJECT     = "twistcert"
LICENSE     = "License :: OSI Approved :: GNU Library or Lesser General Public License (LGPL)"
VERSION     = eval([_ for _ in open("src/twistcert/__init__.py").readlines() if _.startswith("__version__")][0].split("=")[1])
SUMMARY     = "Certified rank two quadratic twists of pairs of Legendre curves"
DESCRIPTION = """\
TwistCert builds one-parameter families of pairs of Legendre curves whose
quadratic twists by a common d both have rank at least two, verifies the
underlying identities exactly over Q(alpha)(t)[u], and generates
self-contained certificates (points, exact infinite order scans, relation
scans and regulator evidence) for rational specializations. Certificates
are JSON-lines files that can be re-verified with 'twistcert recheck'.
"""
KEYWORDS    = "elliptic curves, quadratic twists, Mordell-Weil rank, certificates"

# ------------------------------------------------------------------------------
#
# SETUP DECLARATION
#
# ------------------------------------------------------------------------------

setup(
	name        = PROJECT,
	version     = VERSION,
	author      = "TwistCert contributors",
	description = SUMMARY,
	long_description = DESCRIPTION,
	license     = LICENSE,
	keywords    = KEYWORDS,
	package_dir = { "": "src" },
	packages    = [PROJECT],
	python_requires  = ">=3.9",
	install_requires = ["sympy>=1.13", "numpy"],
	extras_require   = {"tests": ["pytest"]},
	entry_points     = {"console_scripts": ["twistcert = twistcert.cli:main"]},
	classifiers = [
		# See <http://pypi.python.org/pypi?:action=list_classifiers>
		"Development Status :: 4 - Beta",
		"Environment :: Console",
		"Intended Audience :: Science/Research",
		"Natural Language :: English",
		"Topic :: Scientific/Engineering :: Mathematics",
		"Operating System :: POSIX",
		"Programming Language :: Python :: 3",
	]
)
# EOF - vim: tw=80 ts=4 sw=4 noet
