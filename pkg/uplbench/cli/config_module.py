import io
import logging
from dataclasses import dataclass

from uplbench.intersection import DEFAULT_DEPTH, DEFAULT_MAX_STEPS
from uplbench.reduction import DEFAULT_FUEL
from uplbench.semantics import DEFAULT_DELTA
from uplbench.stdlib import standard_signature
from uplbench.syntax import load_signature

STANDARD = 'std'


@dataclass(frozen=True)
class CliConfig(object):

    """
    Options shared by every subcommand
    """

    signature: str = STANDARD
    fuel: int = DEFAULT_FUEL
    depth: int = DEFAULT_DEPTH
    json: bool = False
    seed: int = 0
    verbose: bool = False
    delta: int = DEFAULT_DELTA
    max_steps: int = DEFAULT_MAX_STEPS

    def __post_init__(self):
        for name in ('fuel', 'depth', 'max_steps'):
            if getattr(self, name) < 1:
                raise ValueError('%s must be at least 1, got %d' % (name, getattr(self, name)))
        if self.delta < 0:
            raise ValueError('delta must not be negative, got %d' % self.delta)

    @classmethod
    def from_args(cls, args):
        return cls(signature=args.sig, fuel=args.fuel, depth=args.depth, json=args.json, seed=args.seed,
                   verbose=args.verbose, delta=args.delta, max_steps=args.max_steps)

    @property
    def is_standard(self):
        return self.signature == STANDARD

    @property
    def log_level(self):
        return logging.DEBUG if self.verbose else logging.WARNING

    def load_signature(self):
        """
        :rtype: Signature
        :raises SignatureException: when the signature file is malformed
        """
        if self.is_standard:
            return standard_signature()
        with io.open(self.signature, encoding='utf-8') as f:
            return load_signature(f.read())
