"""
Perron dashboard
"""
import logging
import os

import streamlit as st

from polynomial_page import polynomial_page
from sweep_page import search_page, sweep_page

logging.basicConfig(level=os.getenv("LOG_LEVEL", "WARNING").upper())

st.set_page_config(layout="wide", page_title="Perron Dashboard")

page_names_to_funcs = {
    "Classify": polynomial_page,
    "Sweep": sweep_page,
    "Search": search_page,
}

page_name = st.sidebar.selectbox("Choose a page", page_names_to_funcs.keys())
page_names_to_funcs[page_name]()
