import pandas as pd
import streamlit as st

REPORT_COLUMNS = ["poly", "d", "theorem", "numerical", "rho", "peripheral", "agree"]


def make_reports_frame(reports) -> pd.DataFrame:
    """One row per cross-check report, in the order given"""
    rows = [report.to_json_dict() for report in reports]
    df = pd.DataFrame(rows, columns=REPORT_COLUMNS)
    # theorem is None when the polynomial is not in nonnegative form
    df["theorem"] = df["theorem"].fillna("inapplicable")
    return df


def make_roots_frame(spectrum) -> pd.DataFrame:
    roots = spectrum.complex_roots
    return pd.DataFrame(
        {
            "real": roots.real,
            "imag": roots.imag,
            "modulus": abs(roots),
            "cluster": list(spectrum.clusters),
        }
    )


def make_raw_table(reports):
    st.subheader("Raw Data")
    st.write(make_reports_frame(reports))
