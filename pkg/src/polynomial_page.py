import logging

import streamlit as st

from classify import SignKind, cross_check, eventual_sign
from cli import describe
from digraph import digraph_of
from matrix import companion
from poly import PolynomialParseError, format_polynomial, index_profile, parse_polynomial, snap_zeros
from spectral import RootFindingError
from tables.raw import make_roots_frame

logger = logging.getLogger(__name__)


def polynomial_page():
    """Classify a single polynomial"""
    st.markdown("## Classify a polynomial")

    st.sidebar.subheader("Options")
    zero_eps = st.sidebar.number_input("Zero snapping threshold", min_value=0.0, value=0.0, format="%.2e")
    k_max = st.sidebar.number_input("Max power for eventual sign", min_value=1, max_value=512, value=64)

    text = st.text_input("Polynomial", value="t^3 - 2t^2 - t + 2")
    if not text:
        return

    try:
        p = snap_zeros(parse_polynomial(text), zero_eps)
        report = cross_check(p)
    except (PolynomialParseError, RootFindingError, ValueError) as e:
        logger.warning(f"Could not classify {text!r}: {e}")
        st.error(str(e))
        return

    st.subheader(format_polynomial(p))
    st.write(describe(report))

    profile = index_profile(p)
    col1, col2, col3 = st.columns([1, 1, 1])
    col1.metric(label="d", value=profile.d)
    col2.metric(label="rho", value=f"{report.spectrum.rho:.8g}")
    col3.metric(label="Peripheral roots", value=report.spectrum.peripheral_count)

    for note in report.spectrum.notes:
        st.warning(note)

    with st.expander("Roots"):
        st.write(make_roots_frame(report.spectrum))

    matrix = companion(p)
    with st.expander("Companion matrix"):
        st.text(matrix.to_text())
        st.text(eventual_sign(matrix, SignKind.NONNEG, k_max=int(k_max)).label)

    with st.expander("Digraph"):
        st.text(digraph_of(matrix).to_text())
