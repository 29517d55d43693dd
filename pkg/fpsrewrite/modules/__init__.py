"""Feature modules: each one a models / service / schemas triple."""
