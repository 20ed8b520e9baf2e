"""Python front end for the chaincode library."""
import json

from ._chaincode import binom_valuation, cli
from ._chaincode import rt_weight_distribution as _rt

__all__ = ["ChaincodeError", "VerifyFailed", "binom_valuation", "cli", "rt_weight_distribution", "run"]


class ChaincodeError(ValueError):
    pass


class VerifyFailed(RuntimeError):
    def __init__(self, doc):
        super().__init__("verification failed")
        self.doc = doc


def rt_weight_distribution(nu, e, p, s, n, m=1):
    return [int(x) for x in _rt(nu, e, p, s, n, m)]


def run(command, **options):
    """Runs a subcommand and returns its JSON document as a dict.

    Keyword names match the flags: run("wdist", family="gr", p=2, e=2, m=1, n=1, s=2, lambda_=3, nu=1).
    """
    args = [command]
    for key, value in options.items():
        if value is None:
            continue
        args += ["--" + key.rstrip("_"), str(value)]
    code, out, err = cli(args)
    if code == 1:
        raise ChaincodeError(err.strip())
    doc = json.loads(out)
    if code == 2:
        raise VerifyFailed(doc)
    return doc
