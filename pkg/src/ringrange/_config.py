"""Global toggles.

``verify_witnesses`` turns on re-verification of every witness and
counterexample against the raw definition it certifies.  The test suite
enables it; production runs leave it off for speed.
"""

verify_witnesses = False


def set_verify_mode(on: bool) -> None:
    global verify_witnesses
    verify_witnesses = bool(on)


def verifying() -> bool:
    return verify_witnesses
