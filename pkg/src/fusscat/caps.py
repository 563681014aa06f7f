"""Search-volume caps for the exhaustive enumerators.

Every enumeration entry point takes a ``max_volume`` argument. Passing
``None`` selects :data:`DEFAULT_MAX_VOLUME`. The estimate compared against
the cap is always a cheap upper bound (a box volume or a stars-and-bars
count), never the true output size, so refusals are conservative.
"""

DEFAULT_MAX_VOLUME = 10_000_000


class SearchCapExceeded(RuntimeError):
    """Raised instead of starting a search that is too large.

    Carries the estimated volume so callers (and the CLI, which maps this
    to exit code 2) can report how far over the cap the request was.
    """

    def __init__(self, estimate, cap, what="search"):
        self.estimate = estimate
        self.cap = cap
        self.what = what
        super().__init__(
            f"refusing {what}: estimated volume {estimate} exceeds cap {cap}"
        )


def check_volume(estimate, max_volume, what="search"):
    cap = DEFAULT_MAX_VOLUME if max_volume is None else max_volume
    if estimate > cap:
        raise SearchCapExceeded(estimate, cap, what)
