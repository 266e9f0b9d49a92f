# Benchmark generation and timing package
