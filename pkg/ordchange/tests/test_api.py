"""Tests for the HTTP service"""

import unittest
import sys
import os

import numpy as np

# Add repository root to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))

try:
    from fastapi.testclient import TestClient
    from ordchange.main import app
    API_AVAILABLE = True
except ImportError:
    API_AVAILABLE = False


@unittest.skipIf(not API_AVAILABLE, "fastapi or httpx not available")
class TestService(unittest.TestCase):
    """Test the service endpoints"""

    @classmethod
    def setUpClass(cls):
        cls.client = TestClient(app)
        rng = np.random.default_rng(3)
        cls.values = np.r_[rng.standard_normal(200), np.cumsum(rng.standard_normal(200))].tolist()

    def test_health(self):
        """Test root and health endpoints"""
        self.assertEqual(self.client.get("/health").json(), {"status": "healthy"})
        self.assertEqual(self.client.get("/").json()["status"], "running")

    def test_plans(self):
        """Test the plan registry"""
        plans = self.client.get("/plans").json()["plans"]
        self.assertEqual(len(plans), 10)
        plan = self.client.get("/plans/ar-four-segments").json()
        self.assertEqual(plan["centers"], [0.3, 0.7, 0.9])
        self.assertEqual(self.client.get("/plans/nope").status_code, 404)

    def test_detect(self):
        """Test detection with a fixed seed"""
        body = {"values": self.values, "order": 2, "seed": 5}
        first = self.client.post("/detect", json=body)
        second = self.client.post("/detect", json=body)
        self.assertEqual(first.status_code, 200)
        self.assertEqual(first.json(), second.json())
        self.assertEqual(first.json()["schema"], "ordchange.report/1")

    def test_detect_rejects_short_series(self):
        """Test 422 for data below the length bound"""
        response = self.client.post("/detect", json={"values": self.values[:100], "order": 3})
        self.assertEqual(response.status_code, 422)
        self.assertIn("too short", response.json()["detail"])

    def test_profile_rejects_short_series(self):
        """Test 422 for profile input below the length bound"""
        response = self.client.post("/profile", json={"values": self.values[:50], "order": 3})
        self.assertEqual(response.status_code, 422)
        self.assertIn("too short", response.json()["detail"])

    def test_profile(self):
        """Test the profile endpoint"""
        response = self.client.post("/profile", json={"values": self.values, "order": 1, "stat": "bdexp"})
        self.assertEqual(response.status_code, 200)
        data = response.json()
        self.assertEqual(data["schema"], "ordchange.profile/1")
        self.assertEqual(data["statistic"], "bd_exp")

    def test_simulate(self):
        """Test simulation of a spec document"""
        body = {"spec": {"kind": "AR", "segments": [{"phi": 0.0}], "length": 20}, "seed": 5}
        data = self.client.post("/simulate", json=body).json()
        np.testing.assert_array_equal(data["values"], np.random.default_rng(5).standard_normal(21))

    def test_invalid_spec(self):
        """Test 422 for an out-of-range spec"""
        body = {"spec": {"kind": "AR", "segments": [{"phi": 1.5}], "length": 20}, "seed": 5}
        self.assertEqual(self.client.post("/simulate", json=body).status_code, 422)

    def test_delta(self):
        """Test the Delta grid endpoint"""
        body = {"p": {"iid": True}, "q": {"table": [[0.1, 0.4], [0.4, 0.1]]}, "order": 1,
                "gamma": 0.5, "thetas": [0.25, 0.5, 0.75]}
        data = self.client.post("/delta", json=body).json()
        self.assertEqual(len(data["delta"]), 3)
        self.assertAlmostEqual(data["delta"][1], data["delta_max"], places=12)


if __name__ == '__main__':
    unittest.main()
