import pandas as pd
import streamlit as st

from tables.raw import make_reports_frame


def make_verdict_summary(reports) -> pd.DataFrame:
    """
    Count of instances per (theorem, numerical) verdict pair, with disagreements
    """
    df = make_reports_frame(reports)
    if len(df) == 0:
        return pd.DataFrame(columns=["theorem", "numerical", "count", "disagreements"])

    df["disagreement"] = ~df["agree"].astype(bool)
    summary = (
        df.groupby(["theorem", "numerical"])
        .agg(count=("poly", "size"), disagreements=("disagreement", "sum"))
        .reset_index()
    )
    summary["disagreements"] = summary["disagreements"].astype(int)
    return summary


def make_d_summary(reports) -> pd.DataFrame:
    """Instances per gcd d, with the mean peripheral count"""
    df = make_reports_frame(reports)
    if len(df) == 0:
        return pd.DataFrame(columns=["d", "count", "mean_peripheral"])

    return (
        df.groupby("d")
        .agg(count=("poly", "size"), mean_peripheral=("peripheral", "mean"))
        .reset_index()
    )


def make_recent_summary_stats(reports, title: str = "Summary"):
    summary = make_verdict_summary(reports)

    with st.expander(title, expanded=True):
        st.subheader(title)
        col1, col2, col3 = st.columns([1, 1, 1])
        col1.metric(label="Instances", value=len(reports))
        col2.metric(label="Disagreements", value=int(summary["disagreements"].sum()))
        col3.metric(
            label="Spectrally Perron",
            value=sum(1 for report in reports if report.numerical_verdict.verdict.value == "SpectrallyPerron"),
        )
        st.write(summary)
        st.write(make_d_summary(reports))
