#!/usr/bin/env python
# Encoding: utf8
# -----------------------------------------------------------------------------
# Project   : TwistCert
# -----------------------------------------------------------------------------
# Author    : TwistCert contributors
# -----------------------------------------------------------------------------
# License   : GNU Lesser General Public License
# -----------------------------------------------------------------------------
# Creation  : 13-Oct-2026
# Last mod  : 18-Oct-2026
# -----------------------------------------------------------------------------

import argparse, logging, os, re, sys
import twistcert
from   twistcert import certify, families, factor
from   twistcert.config import RunConfig, ConfigError
from   twistcert.eccore import (
	CurveError, LegendreCurve, TwistedCurve, WeierstrassCurve, QuarticCurve,
	ProjPoint, quarticToWeierstrass, legendreOrbit
)
from   twistcert.families import FamilyError, IdentityFailure, TwistRecord
from   twistcert.identities import verifyIdentities
from   twistcert.parser import parseRat, parseRatFunc
from   twistcert.serialize import CertificateFile, SchemaError, encodeRat
from   twistcert.symalg import SymAlgError, render

__doc__ = """\
The 'twistcert' command line:

>   twistcert verify-identities [--perturb thm51:E1.P2]
>   twistcert generate --alpha 2 --count 3 --out twists.jsonl
>   twistcert recheck twists.jsonl
>   twistcert inspect "legendre(-25/9)"

Exit codes are 0 on success, 1 when a verification fails and 2 on usage,
configuration, parse or schema errors.
"""

EXIT_OK      = 0
EXIT_FAILURE = 1
EXIT_USAGE   = 2

RE_CURVE = re.compile(r"^\s*(legendre|weierstrass|quartic)\s*\((.*)\)\s*$")

class UsageError(Exception): pass

# -----------------------------------------------------------------------------
#
# COMMANDS
#
# -----------------------------------------------------------------------------

def cmdVerifyIdentities( perturb=None ):
	"""Runs the identity suite, returning the exit status."""
	return EXIT_OK if verifyIdentities(perturb) else EXIT_FAILURE

def cmdGenerate( alpha, count, config, options=None ):
	"""Generates 'count' certified records, writing them as a JSON-lines
	file (to stdout when the configuration has no 'out' path) along with a
	CSV summary. Returns the 'CertificateFile'."""
	options = options or {}
	if count <= 0:
		raise UsageError("--count must be positive")
	alpha = families.checkAlpha(alpha)
	if config.family == "custom":
		family = families.familyByName("custom", **options)
	else:
		family = families.familyByName(config.family)
	header = {
		"tool"    : "twistcert",
		"version" : twistcert.__version__,
		"config"  : config.asDict(),
		"family"  : config.family,
		"alpha"   : encodeRat(alpha),
	}
	if config.family == "custom":
		header["custom"] = dict((k, render(v)) for k, v in sorted(options.items()))
	output = CertificateFile(header)
	for record in families.generateTwists(alpha, count, config, family):
		output.append(record.asDict())
	if config.out:
		output.write(config.out)
		if config.csv:
			output.writeSummary(os.path.splitext(config.out)[0] + ".csv")
	else:
		sys.stdout.write(output.dumps())
	if len(output.records) < count:
		logging.warning("Only {0} of {1} records were produced".format(len(output.records), count))
	return output

def recheckFamily( header ):
	"""Returns the symbolic family the records of a certificate file were
	generated with, rebuilt from the header expressions for 'custom', or None
	to let each record rebuild a printed family from its name."""
	if header.get("family") != "custom":
		return None
	options = header.get("custom")
	if not isinstance(options, dict):
		raise SchemaError("A custom family header needs its expressions")
	return families.familyByName("custom", **dict((k, parseRatFunc(v)) for k, v in options.items()))

def cmdRecheck( path ):
	"""Re-verifies every record of the given certificate file, returning the
	exit status."""
	certificates = CertificateFile.Read(path)
	if certificates.header.get("tool") != "twistcert":
		raise SchemaError("Not a twistcert certificate file: {0}".format(path))
	family = recheckFamily(certificates.header)
	failed = 0
	for i, value in enumerate(certificates.records):
		record   = TwistRecord.FromDict(value)
		failures = record.recheck(family)
		if failures:
			failed += 1
			print("record {0} (t = {1}) [FAIL] {2}".format(i + 1, encodeRat(record.t), "; ".join(failures)))
		else:
			print("record {0} (t = {1}) [PASS]".format(i + 1, encodeRat(record.t)))
	print("--")
	print("{0} records, {1} failed".format(len(certificates.records), failed))
	return EXIT_FAILURE if failed else EXIT_OK

def parseCurve( expr ):
	"""Parses 'legendre(lambda[, d])', 'weierstrass(A, B)',
	'weierstrass(a1, a2, a3, a4, a6)' or 'quartic(c4, c3, c2, c1, c0)'."""
	m = RE_CURVE.match(expr)
	if not m:
		raise UsageError("Expected legendre(...), weierstrass(...) or quartic(...), got {0!r}".format(expr))
	kind = m.group(1)
	args = [parseRat(_) for _ in m.group(2).split(",") if _.strip()]
	if kind == "legendre" and len(args) == 1:
		return LegendreCurve(args[0])
	elif kind == "legendre" and len(args) == 2:
		return TwistedCurve.Legendre(args[0], args[1])
	elif kind == "weierstrass" and len(args) in (2, 5):
		return WeierstrassCurve.Short(*args) if len(args) == 2 else WeierstrassCurve(*args)
	elif kind == "quartic" and len(args) == 5:
		return QuarticCurve(*args)
	raise UsageError("Wrong number of arguments for {0}: {1}".format(kind, len(args)))

def cmdInspect( expr, config=None ):
	"""Prints the invariants of the given curve expression."""
	config = config or RunConfig()
	curve  = parseCurve(expr)
	lines  = []
	if isinstance(curve, QuarticCurve):
		I, J = curve.invariants()
		lines.append(("model", "genus one quartic {0}".format(", ".join(encodeRat(_) for _ in curve.coefficients()))))
		lines.append(("invariants I, J", "{0}, {1}".format(encodeRat(I), encodeRat(J))))
		lines.append(("discriminant", encodeRat(curve.discriminant())))
		lines.append(("j-invariant", encodeRat(curve.jInvariant())))
		lines.append(("jacobian", renderCurve(curve.jacobian())))
		seed = factor.rationalSqrt(curve.c0)
		if seed is not None:
			mapping = quarticToWeierstrass(curve, ProjPoint(0 * curve.c0, seed))
			lines.append(("weierstrass image of (0, {0})".format(encodeRat(seed)), renderCurve(mapping.target)))
		else:
			lines.append(("weierstrass image", "no rational point with t = 0"))
	else:
		lines.append(("model", renderCurve(curve)))
		lines.append(("discriminant", encodeRat(curve.discriminant())))
		lines.append(("j-invariant", encodeRat(curve.jInvariant())))
		if isinstance(curve, TwistedCurve) and curve.lam is not None:
			lines.append(("legendre orbit", ", ".join(encodeRat(_) for _ in legendreOrbit(curve.lam))))
			kernel, _, complete = factor.squareFreeKernelRat(curve.d, config.trial_bound, config.rho_budget)
			lines.append(("twist class d", "{0}{1}".format(kernel, "" if complete else " (incomplete factorization)")))
		short = curve.integralShortModel().target
		lines.append(("integral short model", renderCurve(short)))
		primes = config.primes or certify.goodPrimes(short)
		lines.append(("torsion bound (p = {0})".format(", ".join(str(_) for _ in primes)), certify.modpTorsionBound(short, primes)))
	for name, value in lines:
		print("%-32s %s" % (name, value))
	return lines

def renderCurve( curve ):
	if isinstance(curve, WeierstrassCurve):
		return "[{0}]".format(", ".join(encodeRat(_) for _ in curve.coefficients()))
	elif isinstance(curve, TwistedCurve):
		return "{0}*y^2 = x^3 + ({1})x^2 + ({2})x + ({3})".format(*[encodeRat(_) for _ in (curve.d,) + curve.cubic()])
	return repr(curve)

# -----------------------------------------------------------------------------
#
# MAIN
#
# -----------------------------------------------------------------------------

def argumentParser():
	parser = argparse.ArgumentParser(prog="twistcert", description="Certified rank two quadratic twists of pairs of Legendre curves")
	parser.add_argument("-v", "--verbose", action="count", default=0, help="INFO with -v, DEBUG with -vv")
	commands = parser.add_subparsers(dest="command", metavar="COMMAND")
	verify = commands.add_parser("verify-identities", help="run the symbolic identity suite")
	verify.add_argument("--perturb", metavar="FAMILY:POINT", help="double the y-coordinate of a point, e.g. thm51:E1.P2")
	generate = commands.add_parser("generate", help="generate certified twists")
	generate.add_argument("--alpha", required=True)
	generate.add_argument("--count", type=int, default=3)
	generate.add_argument("--family", choices=("thm51", "thm53", "custom"))
	generate.add_argument("--config", metavar="PATH")
	generate.add_argument("--out", metavar="PATH")
	generate.add_argument("--no-csv", dest="csv", action="store_false", default=None)
	generate.add_argument("--relation-bound", type=int)
	generate.add_argument("--doublings", type=int)
	generate.add_argument("--tolerance", type=float)
	generate.add_argument("--trial-bound", type=int)
	generate.add_argument("--rho-budget", type=int)
	generate.add_argument("--digit-budget", type=int)
	generate.add_argument("--walk-limit", type=int)
	generate.add_argument("--workers", type=int)
	for name in ("lambda1", "lambda2", "h1", "h2", "T"):
		generate.add_argument("--" + name, help="custom family expression")
	recheck = commands.add_parser("recheck", help="re-verify a certificate file")
	recheck.add_argument("file")
	inspect = commands.add_parser("inspect", help="print curve invariants")
	inspect.add_argument("curve", help="legendre(l[, d]), weierstrass(A, B), weierstrass(a1, .., a6) or quartic(c4, .., c0)")
	inspect.add_argument("--config", metavar="PATH")
	return parser

def _config( args ):
	config = RunConfig.Load(args.config) if args.config else RunConfig()
	values = {}
	for key in ("family", "out", "csv", "relation_bound", "doublings", "tolerance", "trial_bound", "rho_budget", "digit_budget", "walk_limit", "workers"):
		values[key] = getattr(args, key, None)
	return config.merge(values)

def _run( args ):
	if args.command == "verify-identities":
		return cmdVerifyIdentities(args.perturb)
	elif args.command == "generate":
		config  = _config(args)
		options = {}
		if config.family == "custom":
			for name in ("lambda1", "lambda2", "h1", "h2", "T"):
				value = getattr(args, name)
				options[name] = None if value is None else parseRatFunc(value)
		cmdGenerate(parseRat(args.alpha), args.count, config, options)
		return EXIT_OK
	elif args.command == "recheck":
		return cmdRecheck(args.file)
	elif args.command == "inspect":
		cmdInspect(args.curve, RunConfig.Load(args.config) if args.config else None)
		return EXIT_OK
	raise UsageError("Missing command, try --help")

def main( argv=None ):
	args = argumentParser().parse_args(argv)
	level = logging.WARNING if args.verbose == 0 else logging.INFO if args.verbose == 1 else logging.DEBUG
	logging.basicConfig(level=level, format="%(levelname)s %(message)s")
	try:
		return _run(args)
	except IdentityFailure as e:
		sys.stderr.write("twistcert: {0}\n".format(e))
		return EXIT_FAILURE
	except (UsageError, ConfigError, SymAlgError, SchemaError, FamilyError, CurveError, certify.CertifyError, OSError) as e:
		sys.stderr.write("twistcert: {0}\n".format(e))
		return EXIT_USAGE

if __name__ == "__main__":
	sys.exit(main())

# EOF - vim: tw=80 ts=4 sw=4 noet
