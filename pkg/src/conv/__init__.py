# Conversion checking package
