"""Run manifests, JSON reports and CSV traces."""
