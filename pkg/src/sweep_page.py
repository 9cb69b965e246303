import logging

import streamlit as st

from classify import search_counterexamples, sweep_grid
from matrix import GuardError
from tables.raw import make_raw_table
from tables.summary import make_recent_summary_stats
from utils import parse_grid

logger = logging.getLogger(__name__)


def _grid_options(default_degree: int, default_grid: str):
    st.sidebar.subheader("Grid")
    degree = st.sidebar.number_input("Degree", min_value=1, max_value=10, value=default_degree)
    grid_text = st.sidebar.text_input("Grid values", value=default_grid)
    budget = st.sidebar.number_input("Budget", min_value=1, max_value=1_000_000, value=4096)
    seed = st.sidebar.number_input("Seed", min_value=0, value=0)
    return int(degree), grid_text, int(budget), int(seed)


def sweep_page():
    """Cross-check the theorem against the numerical oracle over a grid of c values"""
    st.markdown("## Sweep")
    degree, grid_text, budget, seed = _grid_options(4, "0,0.5,1,2")

    if not st.button("Run sweep"):
        return

    try:
        reports = sweep_grid(degree, parse_grid(grid_text), budget=budget, seed=seed)
    except (GuardError, ValueError) as e:
        st.error(str(e))
        return

    make_recent_summary_stats(reports, title="Sweep summary")
    make_raw_table(reports)


def search_page():
    """Spectrally Perron polynomials without a nonnegative companion power"""
    st.markdown("## Counterexample search")
    degree, grid_text, budget, seed = _grid_options(3, "-2,-1,0,1,2")
    k_max = st.sidebar.number_input("Max power", min_value=1, max_value=512, value=64)

    if not st.button("Run search"):
        return

    try:
        reports = search_counterexamples(
            degree, parse_grid(grid_text), budget=budget, seed=seed, k_max=int(k_max)
        )
    except (GuardError, ValueError) as e:
        st.error(str(e))
        return

    logger.info(f"Search found {len(reports)} candidates")
    st.write(f"{len(reports)} candidate(s) found, checked up to k = {int(k_max)}")
    make_raw_table(reports)
