# tests/test_envs.py - 환경 (관측 / 보상 / 에피소드) 테스트
import numpy as np
import pytest

from config.models import EnvConfig, EnvKind, ForceMode, JointSpec, SensorModel, SimConfig
from envs.registry import ENV_ALIASES, make_env, make_envs
from envs.tiago_tactile import PRE_GRASP_POSTURE
from envs.utils import build_observation, episode_return, reward, rollout


def _zero(env):
    return lambda obs: np.zeros(env.action_dim)


@pytest.mark.parametrize(
    "kind, n_joints, obs_dim",
    [
        (EnvKind.GRIPPER_TACTILE, 2, 6),
        (EnvKind.TIAGO_TACTILE, 10, 22),
        (EnvKind.TIAGO_PAL_GRIPPER, 10, 20),
    ],
)
def test_dimensions(kind, n_joints, obs_dim):
    env = make_env(EnvConfig(kind=kind))
    obs = env.reset()
    assert env.n_joints == n_joints
    assert env.action_dim == n_joints
    assert env.obs_dim == obs_dim
    assert obs.shape == (obs_dim,)


def test_aliases_cover_every_kind():
    assert set(ENV_ALIASES.values()) == set(EnvKind)


def test_reward_examples():
    assert reward(1.0, 1.0, 1.0) == 0.0
    assert reward(0.0, 0.0, 1.0) == -2.0
    assert reward(1.5, 0.5, 1.0) == -1.0
    # float64: -0.3999999999999999
    assert reward(1.2, 0.8, 1.0) == pytest.approx(-0.4, abs=1e-15)
    assert reward(0.25, 1.75, 1.0) == reward(1.75, 0.25, 1.0)


def test_build_observation_layout():
    obs = build_observation([1.0, 2.0], [3.0, 4.0], [5.0, 6.0])
    np.testing.assert_array_equal(obs, [1.0, 2.0, 3.0, 4.0, 5.0, 6.0])
    assert build_observation([1.0], [2.0]).shape == (2,)


def test_reset_observation_gripper(quiet_env_config):
    """열린 그리퍼: [q, qdot, Δf] = [0.045, 0.045, 0, 0, -1, -1]"""
    env = make_env(quiet_env_config)
    np.testing.assert_array_equal(env.reset(), [0.045, 0.045, 0.0, 0.0, -1.0, -1.0])


def test_reset_observation_tiago():
    env = make_env(EnvConfig(kind=EnvKind.TIAGO_TACTILE, sensor=SensorModel(noise_enabled=False)))
    obs = env.reset()
    np.testing.assert_allclose(obs[:10], PRE_GRASP_POSTURE + [0.045, 0.045])
    np.testing.assert_array_equal(obs[10:20], np.zeros(10))
    np.testing.assert_array_equal(obs[20:], [-1.0, -1.0])
    assert env.finger_joint_indices == (8, 9)


def test_pre_grasp_posture_within_limits():
    env = make_env(EnvConfig(kind=EnvKind.TIAGO_TACTILE))
    assert np.all(env.home >= env.sim.limits.q_min)
    assert np.all(env.home <= env.sim.limits.q_max)


@pytest.mark.parametrize("kind", list(EnvKind))
def test_zero_action_episode_return(kind):
    """아무것도 하지 않으면 매 스텝 -2·f_goal → 300 스텝에 -600"""
    env = make_env(EnvConfig(kind=kind, sensor=SensorModel(noise_enabled=False)))
    assert episode_return(env, _zero(env)) == -600.0


def test_noise_free_reward_flag():
    """reward_noise_free: 관측은 노이즈가 있어도 보상은 노이즈 없는 힘 기준"""
    env = make_env(EnvConfig(reward_noise_free=True))
    env.reset()
    for _ in range(20):
        result = env.step(np.zeros(2))
        assert result.reward == -2.0
    assert np.any(result.obs[4:] != -1.0)


def test_binary_mode_deltas(quiet_env_config):
    """binary 모드 Δf 는 {-1, 0} 중 하나"""
    env = make_env(quiet_env_config.model_copy(update={"force_mode": ForceMode.BINARY}))
    obs = env.reset()
    seen = set(obs[4:].tolist())
    for _ in range(60):
        obs = env.step(np.array([-0.02, -0.02])).obs
        seen |= set(obs[4:].tolist())
    assert seen == {-1.0, 0.0}


def test_binary_mode_reward_uses_binary_forces(quiet_env_config):
    env = make_env(quiet_env_config.model_copy(update={"force_mode": ForceMode.BINARY}))
    env.reset()
    rewards = [env.step(np.array([-0.02, -0.02])).reward for _ in range(60)]
    assert set(rewards) <= {-2.0, -1.0, 0.0}
    assert rewards[-1] == 0.0


def test_step_after_done():
    env = make_env(EnvConfig(episode_length=3))
    env.reset()
    results = [env.step(np.zeros(2)) for _ in range(3)]
    assert [r.done for r in results] == [False, False, True]
    with pytest.raises(RuntimeError):
        env.step(np.zeros(2))


def test_step_before_reset():
    with pytest.raises(RuntimeError):
        make_env(EnvConfig()).step(np.zeros(2))


def test_wrong_action_dimension():
    env = make_env(EnvConfig())
    env.reset()
    with pytest.raises(ValueError):
        env.step(np.zeros(3))


def test_velocity_clamped_in_observation(quiet_env_config):
    env = make_env(quiet_env_config)
    env.reset()
    obs = env.step(np.array([-10.0, 10.0])).obs
    np.testing.assert_allclose(obs[2:4], [-0.05, 0.0])
    assert obs[1] == 0.045


def test_info_fields(quiet_env_config):
    env = make_env(quiet_env_config)
    env.reset()
    info = env.step(np.zeros(2)).info
    assert set(info) == {"step", "f_contact", "f_raw", "f_binary", "object_x", "object_v"}
    assert info["step"] == 1


def test_same_seed_same_episode():
    """같은 시드 + 같은 행동열 → 같은 관측 (노이즈 포함)"""
    actions = np.random.default_rng(0).uniform(-0.05, 0.05, size=(100, 2))

    def observations():
        env = make_env(EnvConfig(seed=3))
        out = [env.reset()]
        out += [env.step(a).obs for a in actions]
        return np.array(out)

    np.testing.assert_array_equal(observations(), observations())


def test_reset_seed_overrides_config_seed():
    env_a = make_env(EnvConfig(seed=1))
    env_b = make_env(EnvConfig(seed=2))
    np.testing.assert_array_equal(env_a.reset(seed=7), env_b.reset(seed=7))


def test_sampled_object_offset():
    """object_offset=None 이면 ±range 에서 시드별로 샘플링"""
    offsets = []
    for seed in range(5):
        env = make_env(EnvConfig(object_offset=None, seed=seed))
        env.reset()
        offsets.append(env.initial_object_x)
    assert all(abs(x) <= 0.005 for x in offsets)
    assert len(set(offsets)) == len(offsets)


def test_make_envs_seeds():
    envs = make_envs(EnvConfig(), 3, master_seed=5)
    assert [e.config.seed for e in envs] == [5, 6, 7]


def test_custom_joint_table():
    specs = [
        JointSpec(name="wrist", q_min=0.5, q_max=1.0, v_max=1.0),
        JointSpec(name="right", q_min=0.0, q_max=0.045, v_max=0.05),
        JointSpec(name="left", q_min=0.0, q_max=0.045, v_max=0.05),
    ]
    env = make_env(EnvConfig(sim=SimConfig(joint_specs=specs, finger_joint_indices=(1, 2))))
    obs = env.reset()
    assert env.obs_dim == 8
    np.testing.assert_array_equal(obs[:3], [0.5, 0.045, 0.045])


def test_rollout_records(quiet_env_config):
    env = make_env(quiet_env_config.model_copy(update={"episode_length": 10}))
    records, total = rollout(env, _zero(env))
    assert len(records) == 10
    assert total == pytest.approx(sum(r.reward for r in records))
    assert records[-1].t == pytest.approx(0.2)
    assert set(records[0].to_dict()) == {"t", "q", "qdot", "f_contact", "f_raw", "action", "reward", "object_x"}
