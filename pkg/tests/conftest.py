from fractions import Fraction

from hypothesis import strategies as st

# test points with e1 > 0 > e2, so ebar is real and hbar > 0
POINT = (Fraction(2), Fraction(-3))
POINTS = [(Fraction(2), Fraction(-3)), (Fraction(3), Fraction(-2)), (Fraction(5), Fraction(-1))]

small_rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
nonzero_rationals = small_rationals.filter(lambda x: x != 0)


def pytest_terminal_summary(terminalreporter):
    from tests.acceptance_log import RESULTS

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, passed, seconds in sorted(RESULTS):
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'} criterion {number}: {title} ({seconds:.2f}s)")
