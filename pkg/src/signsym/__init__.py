"""Signed graphs: switching, exact spectra and sign-symmetry."""
