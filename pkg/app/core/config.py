import os

from dotenv import load_dotenv

load_dotenv()

ENGINES = ("fast", "naive")


class ConfigProvider:
    def __init__(self):
        self.engine = os.getenv("CONGRUENCE_ENGINE", "fast")

    def get_engine(self):
        if self.engine not in ENGINES:
            raise ValueError(f"Unknown engine {self.engine!r}, expected one of {ENGINES}")
        return self.engine

    def get_log_level(self):
        return os.getenv("LOG_LEVEL", "INFO").upper()

    def get_log_file(self):
        return os.getenv("LOG_FILE", "")

    def get_max_semigroup_size(self):
        return int(os.getenv("MAX_SEMIGROUP_SIZE", 2_000_000))

    def is_cache_enabled(self):
        return os.getenv("CACHE_ENABLED", "false").lower() in ("1", "true", "yes")

    def get_cache_ttl(self):
        return int(os.getenv("CACHE_TTL", 3600))

    def get_bench_samples(self):
        return int(os.getenv("BENCH_SAMPLES", 10))

    def get_redis_url(self):
        redishost = os.getenv("REDISHOST", "redis")
        redisport = int(os.getenv("REDISPORT", 6379))
        redisuser = os.getenv("REDISUSER", "")
        redispassword = os.getenv("REDISPASSWORD", "")
        # Construct the Redis URL
        if redisuser and redispassword:
            redis_url = f"redis://{redisuser}:{redispassword}@{redishost}:{redisport}/0"
        else:
            redis_url = f"redis://{redishost}:{redisport}/0"
        return redis_url


config_provider = ConfigProvider()
