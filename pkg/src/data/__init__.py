# Source parsing package
