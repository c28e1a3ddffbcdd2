import math
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from algebra import DEFAULT_PRIME, PrimeField, is_prime
from utils.cache import default_cache_dir
from utils.helper_functions import check_range, default_values

run_settings = {
    "prime" : {"label":"Prime modulus for evaluations",
               "min_value": 3, "max_value": 2**31 - 1, "value": DEFAULT_PRIME, "key": "prime"},

    "seed" : {"label":"Seed for every random stream",
              "min_value": 0, "max_value": 2**63 - 1, "value": 0, "key": "seed"},

    "margin_floor" : {"label":"Extra evaluation points beyond dim I_m (at least)",
                      "min_value": 1, "max_value": 10000, "value": 10, "key": "margin_floor"},

    "margin_fraction" : {"label":"Extra evaluation points as a fraction of dim I_m",
                         "min_value": 0.0, "max_value": 1.0, "value": 0.05, "key": "margin_fraction"},

    "candidate_budget" : {"label":"Random candidates tried per degree",
                          "min_value": 1, "max_value": 100000, "value": 400, "key": "candidate_budget"},

    "redraw_budget" : {"label":"Redraws of a candidate that vanishes at the fingerprint points",
                       "min_value": 1, "max_value": 10000, "value": 50, "key": "redraw_budget"},

    "max_order_factor" : {"label":"Largest intermediate covariant order, as a multiple of n",
                          "min_value": 1, "max_value": 10, "value": 2, "key": "max_order_factor"},

    "fingerprint_points" : {"label":"Points in a basis record fingerprint",
                            "min_value": 1, "max_value": 10000, "value": 64, "key": "fingerprint_points"},

    "nullcone_trials" : {"label":"Random nullforms and generic forms per nullcone sample",
                         "min_value": 0, "max_value": 100000, "value": 100, "key": "nullcone_trials"},

    "jacobian_points" : {"label":"Random points for the jacobian rank",
                         "min_value": 1, "max_value": 1000, "value": 5, "key": "jacobian_points"},

    "threads" : {"label":"Worker threads",
                 "min_value": 1, "max_value": 256, "value": 1, "key": "threads"},
}

defaults = default_values(run_settings)


class RunConfig(BaseModel):
    """Everything that determines a campaign run; the seed fixes all randomness."""

    model_config = ConfigDict(frozen=True)

    n: int = 9
    prime: int = defaults["prime"]
    seed: int = defaults["seed"]
    max_degree: Optional[int] = None
    margin_floor: int = defaults["margin_floor"]
    margin_fraction: float = defaults["margin_fraction"]
    candidate_budget: int = defaults["candidate_budget"]
    redraw_budget: int = defaults["redraw_budget"]
    max_order_factor: int = defaults["max_order_factor"]
    fingerprint_points: int = defaults["fingerprint_points"]
    nullcone_trials: int = defaults["nullcone_trials"]
    jacobian_points: int = defaults["jacobian_points"]
    threads: int = defaults["threads"]
    output: Literal["text", "json", "csv"] = "text"
    cache_dir: Optional[str] = None
    use_cache: bool = True

    @field_validator("prime", "seed", "margin_floor", "margin_fraction", "candidate_budget", "redraw_budget",
                     "max_order_factor", "fingerprint_points", "nullcone_trials", "jacobian_points", "threads")
    @classmethod
    def in_range(cls, value, info):
        return check_range(run_settings, info.field_name, value)

    @field_validator("n")
    @classmethod
    def positive_order(cls, value):
        if value < 1:
            raise ValueError("n must be positive")
        return value

    @model_validator(mode="after")
    def prime_fits_order(self):
        if self.prime == 2 or not is_prime(self.prime):
            raise ValueError(f"prime {self.prime} is not an odd prime")
        # transvectant prefactors involve factorials up to 2n
        if self.prime <= 2 * self.n + 1:
            raise ValueError(f"prime must exceed 2n+1 = {2 * self.n + 1}")
        return self

    @property
    def resolved_cache_dir(self):
        return self.cache_dir or default_cache_dir()

    @property
    def max_order(self):
        return self.max_order_factor * self.n

    def margin(self, dim):
        """Evaluation points beyond ``dim``: max(floor, ceil(fraction * dim))."""
        return max(self.margin_floor, math.ceil(round(self.margin_fraction * dim, 9)))

    def ring(self):
        return PrimeField(self.prime)
