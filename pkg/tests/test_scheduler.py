import numpy as np
import pytest

from cosim_core import Event, EventScheduler, SyncViolation


class TestEventScheduler:
    """Ordering and clock rules of the event queue"""

    def setup_method(self):
        self.fired = []
        self.scheduler = EventScheduler(self.fired.append)

    def test_executes_in_time_order(self):
        self.scheduler.schedule(30, "a")
        self.scheduler.schedule(10, "b")
        self.scheduler.schedule(20, "c")

        assert self.scheduler.run_until(100) == 3
        assert [e.target for e in self.fired] == ["b", "c", "a"]
        assert self.scheduler.now() == 100

    def test_same_timestamp_runs_in_insertion_order(self):
        for name in ["first", "second", "third"]:
            self.scheduler.schedule(50, name)

        self.scheduler.run_until(50)

        assert [e.target for e in self.fired] == ["first", "second", "third"]
        assert [e.seq for e in self.fired] == [0, 1, 2]

    def test_run_until_leaves_later_events_queued(self):
        self.scheduler.schedule(10, "early")
        self.scheduler.schedule(11, "late")

        assert self.scheduler.run_until(10) == 1
        assert self.scheduler.pending() == 1
        assert self.scheduler.next_fire_at() == 11

    def test_now_tracks_event_time_during_dispatch(self):
        seen = []
        scheduler = EventScheduler(lambda e: seen.append(scheduler.now()))
        scheduler.schedule(7, "x")
        scheduler.schedule(9, "y")

        scheduler.run_until(20)

        assert seen == [7, 9]

    def test_event_scheduled_during_dispatch_at_same_time_runs_in_same_drain(self):
        def dispatch(event: Event):
            self.fired.append(event)
            if event.target == "parent":
                scheduler.schedule(scheduler.now(), "child")

        scheduler = EventScheduler(dispatch)
        scheduler.schedule(5, "parent")

        assert scheduler.run_until(5) == 2
        assert [e.target for e in self.fired] == ["parent", "child"]

    def test_schedule_in_past_raises(self):
        self.scheduler.run_until(100)

        with pytest.raises(SyncViolation):
            self.scheduler.schedule(99, "late")

    def test_schedule_at_now_is_allowed(self):
        self.scheduler.run_until(100)
        event = self.scheduler.schedule(100, "now")

        assert event.fire_at == 100
        assert self.scheduler.run_until(100) == 1

    def test_run_until_backwards_raises(self):
        self.scheduler.run_until(100)

        with pytest.raises(SyncViolation):
            self.scheduler.run_until(50)

    def test_empty_queue(self):
        assert self.scheduler.run_until(1_000) == 0
        assert self.scheduler.next_fire_at() is None

    def test_record_trace(self):
        scheduler = EventScheduler(lambda e: None, record_trace=True)
        scheduler.schedule(2, "b")
        scheduler.schedule(1, "a")

        scheduler.run_until(5)

        assert scheduler.trace == [(1, 1, "a"), (2, 0, "b")]
        assert scheduler.executed == 2


class TestSchedulerOracle:
    """Random batches against a sorted-list reference"""

    def test_matches_sorted_list_oracle(self):
        rng = np.random.default_rng(2024)
        for _ in range(1000):
            n = int(rng.integers(1, 1001))
            # narrow time range so many timestamps collide
            times = rng.integers(0, max(2, n // 4), size=n).tolist()
            fired = []
            scheduler = EventScheduler(lambda e: fired.append(e.payload))
            for i, t in enumerate(times):
                scheduler.schedule(t, "node", payload=i)

            scheduler.run_until(max(times))

            expected = sorted(range(n), key=lambda i: (times[i], i))
            assert fired == expected
