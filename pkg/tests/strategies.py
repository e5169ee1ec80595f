"""Shared hypothesis strategies."""
from hypothesis import strategies as st

# labels away from the integers, so that V_alpha is simple and projective
generic_alpha = st.builds(
    complex,
    st.floats(0.05, 1.95).filter(lambda x: abs(x - 1) > 0.05),
    st.floats(-0.5, 0.5),
)
