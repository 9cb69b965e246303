"""Test the dashboard pages with streamlit replaced by mocks"""
from unittest.mock import MagicMock, patch

import polynomial_page
import sweep_page


@patch("polynomial_page.st")
def test_polynomial_page_reports_parse_errors(mock_st):
    mock_st.sidebar.number_input.side_effect = [0.0, 64]
    mock_st.text_input.return_value = "t^2 + y"

    polynomial_page.polynomial_page()

    mock_st.error.assert_called_once()
    mock_st.metric.assert_not_called()


@patch("tables.raw.st")
@patch("polynomial_page.st")
def test_polynomial_page_shows_companion(mock_st, mock_raw_st):
    mock_st.sidebar.number_input.side_effect = [0.0, 64]
    mock_st.text_input.return_value = "t^2 - t - 1"
    columns = [MagicMock(), MagicMock(), MagicMock()]
    mock_st.columns.return_value = columns

    polynomial_page.polynomial_page()

    mock_st.error.assert_not_called()
    mock_st.write.assert_any_call("SpectrallyPerron (d = 1, rho = 1.61803398875)")
    mock_st.text.assert_any_call("0 1\n1 1")
    mock_st.text.assert_any_call("A^1 is nonneg")
    columns[0].metric.assert_called_once_with(label="d", value=1)


@patch("tables.summary.st")
@patch("tables.raw.st")
@patch("sweep_page.st")
def test_sweep_page(mock_st, mock_raw_st, mock_summary_st):
    mock_st.sidebar.number_input.side_effect = [2, 4096, 0]
    mock_st.sidebar.text_input.return_value = "0,1"
    mock_st.button.return_value = True
    mock_summary_st.columns.return_value = [MagicMock(), MagicMock(), MagicMock()]

    sweep_page.sweep_page()

    mock_st.error.assert_not_called()
    frame = mock_raw_st.write.call_args[0][0]
    assert len(frame) == 4
    assert frame["agree"].all()


@patch("sweep_page.st")
def test_sweep_page_waits_for_button(mock_st):
    mock_st.sidebar.number_input.side_effect = [2, 4096, 0]
    mock_st.sidebar.text_input.return_value = "0,1"
    mock_st.button.return_value = False

    sweep_page.sweep_page()

    mock_st.markdown.assert_called_once()
    mock_st.error.assert_not_called()


@patch("tables.raw.st")
@patch("sweep_page.st")
def test_search_page(mock_st, mock_raw_st):
    mock_st.sidebar.number_input.side_effect = [3, 125, 0, 64]
    mock_st.sidebar.text_input.return_value = "-2,-1,0,1,2"
    mock_st.button.return_value = True

    sweep_page.search_page()

    mock_st.error.assert_not_called()
    frame = mock_raw_st.write.call_args[0][0]
    assert "t^3 - 2t^2 - t + 2" in frame["poly"].tolist()
    assert (frame["numerical"] == "SpectrallyPerron").all()
    mock_st.write.assert_called_once_with(f"{len(frame)} candidate(s) found, checked up to k = 64")


@patch("sweep_page.st")
def test_search_page_reports_bad_grid(mock_st):
    mock_st.sidebar.number_input.side_effect = [3, 125, 0, 64]
    mock_st.sidebar.text_input.return_value = "-2,x"
    mock_st.button.return_value = True

    sweep_page.search_page()

    mock_st.error.assert_called_once()
