"""Circuit builders for the QAOA ansatz: phase separators, state preparation and mixers."""
