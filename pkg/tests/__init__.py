# Tests for PyRSC
