# Encoding: utf8
import io
import pytest
from   twistcert.identities import IdentitySuite, verifyIdentities, provides, depends

def failLines( text ):
	return [_ for _ in text.splitlines() if "[FAIL]" in _]

def test_decorators():
	@provides("a", "b")
	@depends("c")
	def check(): pass
	assert check._provides == ["a", "b"]
	assert check._depends  == ["c"]

def test_checks_are_ordered():
	names = [_.__name__ for _ in IdentitySuite()._getTests()]
	assert names == sorted(names)
	assert names[0].startswith("testA_")

class CrashingSuite(IdentitySuite):

	def _getTests( self ):
		return [self.testA_Crash, self.testB_After]

	@provides("crash")
	def testA_Crash( self ):
		raise ValueError("0**0")

	@depends("crash")
	def testB_After( self ):
		self.expect("after", True)

def test_crashing_check_is_a_failure():
	out = io.StringIO()
	assert not CrashingSuite(out=out).run()
	lines = failLines(out.getvalue())
	assert len(lines) == 2
	assert lines[0].startswith("A_Crash") and "ValueError: 0**0" in lines[0]
	assert lines[1].startswith("B_After") and "depends on a failed check" in lines[1]
	assert out.getvalue().rstrip().endswith("Completed   0%")

@pytest.mark.slow
def test_all_identities_hold():
	out = io.StringIO()
	assert verifyIdentities(out=out)
	text = out.getvalue()
	assert failLines(text) == []
	assert "genus_bound deg 6 -> 2" in text
	assert "genus_bound deg 12 -> 5" in text
	assert text.rstrip().endswith("Completed 100%")

@pytest.mark.slow
def test_perturbed_point_fails_alone():
	out = io.StringIO()
	assert not verifyIdentities(perturb="thm51:E1.P2", out=out)
	lines = failLines(out.getvalue())
	assert len(lines) == 1
	assert "thm51 E1.P2" in lines[0]

# EOF - vim: tw=80 ts=4 sw=4 noet
