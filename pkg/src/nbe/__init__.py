# Normalization by evaluation package
