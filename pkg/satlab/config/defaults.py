"""Default configuration values for satlab."""

DEFAULT_CONFIG = {
    "groups": {
        "max_elements": 10000,
        "max_subgroups": 5000,
    },
    "transfer": {
        "max_enumeration_subgroups": 12,
    },
    "oracle": {
        "max_orbits": 22,
        "jobs": 1,
        "chunk_size": 4096,
    },
    "constructors": {
        "seed": "${SATLAB_SEED:-0}",
        "theta": 0.0,
        "stage_retries": 50,
        "max_rounds": 10000,
    },
    "logging": {
        "level": "INFO",
        "log_file": "./logs/satlab.log",
        "max_log_size_mb": 50,
        "backup_count": 5,
    },
    "app": {
        "app_name": "satlab",
        "version": "0.3.0",
        "debug": False,
    },
}
