#!/usr/bin/env python
# Encoding: utf8
# -----------------------------------------------------------------------------
# Project   : TwistCert
# -----------------------------------------------------------------------------
# Author    : TwistCert contributors
# -----------------------------------------------------------------------------
# License   : GNU Lesser General Public License
# -----------------------------------------------------------------------------
# Creation  : 11-Oct-2026
# Last mod  : 18-Oct-2026
# -----------------------------------------------------------------------------

import json

__doc__ = """\
The run configuration: factorization budgets, certification parameters,
walk limits and output options. A configuration is loaded from a flat JSON
object, then overridden by the command line flags, and its snapshot is
embedded in every certificate header.

The 'primes' list (None for the first good primes above 5) drives the mod p
torsion bounds of 'inspect' and the mod p cross-check of every order
certificate during generation.
"""

FAMILIES = ("thm51", "thm53", "custom")

DEFAULTS = {
	"trial_bound"    : 10 ** 6,
	"rho_budget"     : 10 ** 6,
	"relation_bound" : 3,
	"doublings"      : 4,
	"tolerance"      : 1e-3,
	"primes"         : None,
	"digit_budget"   : 10 ** 5,
	"walk_limit"     : 200,
	"workers"        : 1,
	"family"         : "thm51",
	"out"            : None,
	"csv"            : True,
}

POSITIVE = ("trial_bound", "rho_budget", "relation_bound", "doublings", "digit_budget", "walk_limit", "workers")

class ConfigError(Exception): pass

class RunConfig:

	def __init__( self, **values ):
		for key, value in DEFAULTS.items():
			setattr(self, key, value)
		self.merge(values)

	def merge( self, values ):
		"""Overrides the current values with the given dictionary, ignoring
		'None' values so that unset flags keep the file or default value."""
		unknown = sorted(set(values) - set(DEFAULTS))
		if unknown:
			raise ConfigError("Unknown configuration keys: {0}".format(", ".join(unknown)))
		for key, value in values.items():
			if value is not None:
				setattr(self, key, value)
		return self.validate()

	def validate( self ):
		for key in POSITIVE:
			value = getattr(self, key)
			if isinstance(value, bool) or not isinstance(value, int) or value <= 0:
				raise ConfigError("{0} must be a positive integer, got {1!r}".format(key, value))
		if isinstance(self.tolerance, bool) or not isinstance(self.tolerance, (int, float)) or not self.tolerance > 0:
			raise ConfigError("tolerance must be positive, got {0!r}".format(self.tolerance))
		if self.primes is not None:
			if not isinstance(self.primes, list) or not self.primes or not all(isinstance(_, int) and _ > 2 for _ in self.primes):
				raise ConfigError("primes must be a non-empty list of odd primes, got {0!r}".format(self.primes))
		if self.family not in FAMILIES:
			raise ConfigError("family must be one of {0}, got {1!r}".format(", ".join(FAMILIES), self.family))
		if not isinstance(self.csv, bool):
			raise ConfigError("csv must be a boolean")
		return self

	def asDict( self ):
		return dict((key, getattr(self, key)) for key in DEFAULTS)

	@classmethod
	def Loads( cls, text ):
		try:
			values = json.loads(text)
		except ValueError as e:
			raise ConfigError("Configuration is not valid JSON: {0}".format(e))
		if not isinstance(values, dict):
			raise ConfigError("Configuration must be a JSON object")
		return cls(**values)

	@classmethod
	def Load( cls, path ):
		try:
			with open(path) as f:
				return cls.Loads(f.read())
		except OSError as e:
			raise ConfigError("Cannot read configuration {0}: {1}".format(path, e))

	def __repr__( self ):
		return "<RunConfig {0}>".format(" ".join("{0}={1!r}".format(k, v) for k, v in sorted(self.asDict().items())))

# EOF - vim: tw=80 ts=4 sw=4 noet
