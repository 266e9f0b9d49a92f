# Core syntax package
