from __future__ import annotations

import click

h = click.option(
    "--h",
    "h",
    help='The polynomial h(x) of the relation tx - xt = h(x), for example "x^2".',
)

json = click.option(
    "--json",
    "json_output",
    is_flag=True,
    help='Print a {"ok", "result", "diagnostics"} JSON document instead of text.',
)

config = click.option(
    "--config",
    type=click.Path(dir_okay=False),
    help="Path to a YAML config file, applied after ~/.oreh/config.yaml and ./oreh.yaml.",
)

verbose = click.option(
    "-v",
    "--verbose",
    is_flag=True,
    help="Verbose output.",
)

rho = click.option(
    "--rho",
    required=True,
    help='An automorphism, for example "sigma(x^2);tau(2)". The rightmost factor applies first.',
)

derivation = click.option(
    "--D",
    "derivation",
    required=True,
    help='A derivation "deriv(w=..., H=..., s=...)", or an element w read as ad_w.',
)

order_bound = click.option(
    "--order-bound",
    type=click.IntRange(min=1),
    help="The largest order of roots of unity to enumerate.",
)

rdeg_bound = click.option(
    "--rdeg-bound",
    type=click.IntRange(min=0),
    help="The largest degree of the shift r to solve for.",
)

tasks = click.option(
    "--tasks",
    type=click.IntRange(min=1),
    help="The number of worker threads for the enumeration over admissible units.",
)

seed = click.option(
    "--seed",
    type=int,
    help="The seed of the random samples.",
)
