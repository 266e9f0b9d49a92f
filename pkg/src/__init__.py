# etabench package