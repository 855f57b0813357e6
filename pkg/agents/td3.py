# agents/td3.py - TD3 학습기 (numpy)
"""Twin Delayed DDPG in plain numpy.

The learner acts in a normalised space a ∈ [-1, 1]^n; the environment sees
shape(a) * action_scale (per-joint v_max, see agents.scaling). Observations
and rewards pass through the agent's LearnerScaling before reaching the
networks. Exploration and target-smoothing noise are defined in the
normalised space.
"""
import logging
from collections import deque
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Optional

import numpy as np

from config.models import TD3Config

from .mlp import MLP, Adam, soft_update
from .replay_buffer import Batch, ReplayBuffer
from .scaling import LearnerScaling, shape_action, unshape_action

logger = logging.getLogger(__name__)

# 학습기 rng 는 환경 시드와 겹치지 않도록 오프셋
LEARNER_SEED_OFFSET = 10_000


class TD3Agent:
    """Actor, twin critics, their targets and optimizers."""

    def __init__(
        self,
        obs_dim: int,
        action_dim: int,
        action_scale,
        config: TD3Config,
        rng: np.random.Generator,
        scaling: Optional[LearnerScaling] = None,
    ):
        self.obs_dim = obs_dim
        self.action_dim = action_dim
        self.action_scale = np.broadcast_to(np.asarray(action_scale, dtype=np.float64), (action_dim,)).copy()
        self.config = config
        self.rng = rng
        self.scaling = scaling if scaling is not None else LearnerScaling.identity(obs_dim)

        hidden = tuple(config.hidden_sizes)
        self.actor = MLP((obs_dim, *hidden, action_dim), "tanh", rng)
        self.critic1 = MLP((obs_dim + action_dim, *hidden, 1), "linear", rng)
        self.critic2 = MLP((obs_dim + action_dim, *hidden, 1), "linear", rng)
        self.actor_target = self.actor.copy()
        self.critic1_target = self.critic1.copy()
        self.critic2_target = self.critic2.copy()

        self.actor_opt = Adam(self.actor, config.learning_rate)
        self.critic1_opt = Adam(self.critic1, config.learning_rate)
        self.critic2_opt = Adam(self.critic2, config.learning_rate)

        self.critic_updates = 0
        self.actor_updates = 0

    # --- acting --------------------------------------------------------------

    def act_normalized(self, obs, explore: bool = False) -> np.ndarray:
        obs = np.asarray(obs, dtype=np.float64)
        if obs.shape != (self.obs_dim,):
            raise ValueError(f"observation shape {obs.shape} does not match ({self.obs_dim},)")
        action = self.actor(self.scaling.observation(obs))
        if explore:
            action = action + self.rng.normal(0.0, self.config.exploration_noise_std, size=self.action_dim)
        return np.clip(action, -1.0, 1.0)

    def to_env_action(self, action) -> np.ndarray:
        return shape_action(action, self.config.action_exponent) * self.action_scale

    def act(self, obs, explore: bool = False) -> np.ndarray:
        """Joint velocity command within ±action_scale."""
        return self.to_env_action(self.act_normalized(obs, explore))

    # --- losses --------------------------------------------------------------

    def critic_targets(self, batch: Batch) -> np.ndarray:
        """y = r + γ(1 − done)·min(Q1', Q2') at the smoothed target action."""
        cfg = self.config
        next_action = self.actor_target(batch.next_obs)
        noise = np.clip(
            self.rng.normal(0.0, cfg.target_noise_std, size=next_action.shape),
            -cfg.target_noise_clip,
            cfg.target_noise_clip,
        )
        next_action = np.clip(next_action + noise, -1.0, 1.0)
        next_input = np.concatenate([batch.next_obs, next_action], axis=1)
        q_next = np.minimum(self.critic1_target(next_input), self.critic2_target(next_input))[:, 0]
        return batch.rewards + cfg.gamma * (1.0 - batch.dones) * q_next

    @staticmethod
    def critic_loss_and_grads(critic: MLP, obs, actions, targets):
        """MSE of one critic against fixed targets, with parameter gradients."""
        x = np.concatenate([obs, actions], axis=1)
        q, cache = critic.forward(x)
        diff = q[:, 0] - targets
        loss = float(np.mean(diff ** 2))
        grad_q = (2.0 / len(diff)) * diff[:, None]
        grads_w, grads_b, _ = critic.backward(cache, grad_q)
        return loss, grads_w, grads_b

    def actor_loss_and_grads(self, obs):
        """-mean Q1(s, π(s)) and its gradient w.r.t. the actor parameters."""
        action, actor_cache = self.actor.forward(obs)
        q, critic_cache = self.critic1.forward(np.concatenate([obs, action], axis=1))
        loss = -float(np.mean(q))
        grad_q = np.full_like(q, -1.0 / len(q))
        _, _, grad_input = self.critic1.backward(critic_cache, grad_q)
        grad_action = grad_input[:, self.obs_dim:]
        grads_w, grads_b, _ = self.actor.backward(actor_cache, grad_action)
        return loss, grads_w, grads_b

    # --- updates -------------------------------------------------------------

    def critic_update(self, batch: Batch) -> float:
        targets = self.critic_targets(batch)
        loss1, gw1, gb1 = self.critic_loss_and_grads(self.critic1, batch.obs, batch.actions, targets)
        loss2, gw2, gb2 = self.critic_loss_and_grads(self.critic2, batch.obs, batch.actions, targets)
        self.critic1_opt.step(gw1, gb1)
        self.critic2_opt.step(gw2, gb2)
        self.critic_updates += 1
        return loss1 + loss2

    def actor_update(self, batch: Batch) -> float:
        loss, grads_w, grads_b = self.actor_loss_and_grads(batch.obs)
        self.actor_opt.step(grads_w, grads_b)
        self.actor_updates += 1
        self.soft_update_targets()
        return loss

    def soft_update_targets(self):
        tau = self.config.tau
        soft_update(self.actor_target, self.actor, tau)
        soft_update(self.critic1_target, self.critic1, tau)
        soft_update(self.critic2_target, self.critic2, tau)

    def update(self, batch: Batch) -> dict:
        """One critic step; an actor step every policy_delay critic steps."""
        stats = {"critic_loss": self.critic_update(batch)}
        if self.critic_updates % self.config.policy_delay == 0:
            stats["actor_loss"] = self.actor_update(batch)
        return stats

    def networks(self) -> dict[str, MLP]:
        return {"actor": self.actor, "critic1": self.critic1, "critic2": self.critic2}


@dataclass
class CurvePoint:
    step: int
    episode: int
    rolling_mean: float
    best_so_far: float


@dataclass
class CheckpointEvent:
    step: int
    best_mean: float


@dataclass
class TrainResult:
    agent: TD3Agent
    curve: list[CurvePoint] = field(default_factory=list)
    checkpoints: list[CheckpointEvent] = field(default_factory=list)
    episode_returns: list[float] = field(default_factory=list)

    @property
    def final_rolling_mean(self) -> float:
        return self.curve[-1].rolling_mean if self.curve else float("-inf")


class _Tracker:
    """Rolling mean over the last eval_window episodes and best-so-far checkpointing."""

    def __init__(self, result: TrainResult, window: int, f_goal: float, on_best: Optional[Callable[[TD3Agent], None]]):
        self.result = result
        self.window = deque(maxlen=window)
        self.best = float("-inf")
        self.f_goal = f_goal
        self.on_best = on_best

    def episode_end(self, step: int, episode_return: float):
        self.result.episode_returns.append(episode_return)
        self.window.append(episode_return)
        rolling = float(np.mean(self.window))
        if rolling > self.best:
            self.best = rolling
            self.result.checkpoints.append(CheckpointEvent(step=step, best_mean=rolling))
            if self.on_best is not None:
                self.on_best(self.result.agent)
            logger.info(f"[Train] step={step} new best rolling mean {rolling:.3f} (f_goal={self.f_goal})")
        self.result.curve.append(
            CurvePoint(step=step, episode=len(self.result.episode_returns), rolling_mean=rolling, best_so_far=self.best)
        )
        logger.debug(f"[Train] step={step} episode_return={episode_return:.3f} rolling_mean={rolling:.3f}")


def _choose_action(agent: TD3Agent, obs, step: int, start_steps: int) -> np.ndarray:
    if step <= start_steps:
        # warmup 은 관절 속도 공간에서 균등
        velocity = agent.rng.uniform(-1.0, 1.0, size=agent.action_dim)
        return unshape_action(velocity, agent.config.action_exponent)
    return agent.act_normalized(obs, explore=True)


def train(
    env,
    config: TD3Config,
    seed: int,
    on_best: Optional[Callable[[TD3Agent], None]] = None,
    extra_envs: Optional[list] = None,
) -> TrainResult:
    """Train a TD3 agent for config.total_timesteps environment steps.

    Args:
        env: environment (seeded with `seed` at the first reset)
        config: TD3 hyperparameters
        seed: run seed; the learner rng uses seed + 10000
        on_best: called with the agent whenever the rolling mean sets a new best
        extra_envs: additional environments for parallel rollouts
            (config.parallel_envs > 1); transitions enter the buffer in
            completion order, so this mode is not bit-reproducible

    Returns:
        TrainResult with learning curve, checkpoint events and the final agent
    """
    rng = np.random.default_rng(seed + LEARNER_SEED_OFFSET)
    agent = TD3Agent(env.obs_dim, env.action_dim, env.action_high, config, rng, LearnerScaling.from_env(env, config))
    buffer = ReplayBuffer(config.buffer_capacity, env.obs_dim, env.action_dim)
    result = TrainResult(agent=agent)
    tracker = _Tracker(result, config.eval_window, env.config.f_goal, on_best)

    logger.info(
        f"[Train] seed={seed} total_timesteps={config.total_timesteps} "
        f"obs_dim={env.obs_dim} action_dim={env.action_dim} f_goal={env.config.f_goal}"
        f" obs_normalization={config.obs_normalization} reward_transform={config.reward_transform}"
        f" action_exponent={config.action_exponent}"
    )
    if config.parallel_envs > 1:
        envs = [env] + list(extra_envs or [])
        if len(envs) < config.parallel_envs:
            raise ValueError(f"parallel_envs={config.parallel_envs} but only {len(envs)} environments given")
        _train_parallel(envs[: config.parallel_envs], agent, buffer, config, seed, tracker)
    else:
        _train_serial(env, agent, buffer, config, seed, tracker)

    logger.info(
        f"[Train] done: episodes={len(result.episode_returns)} "
        f"final rolling mean={result.final_rolling_mean:.3f} best={tracker.best:.3f}"
    )
    return result


def _store(agent: TD3Agent, buffer: ReplayBuffer, obs, action, result):
    """Buffer holds scaled observations and rewards, as the networks see them."""
    scaling = agent.scaling
    buffer.add(scaling.observation(obs), action, scaling.reward(result.reward), scaling.observation(result.obs), 0.0)


def _learn(agent: TD3Agent, buffer: ReplayBuffer, config: TD3Config, step: int):
    if step > config.start_steps and len(buffer) >= config.batch_size:
        agent.update(buffer.sample(config.batch_size, agent.rng))


def _train_serial(env, agent, buffer, config, seed, tracker):
    obs = env.reset(seed)
    episode_return = 0.0
    for step in range(1, config.total_timesteps + 1):
        action = _choose_action(agent, obs, step, config.start_steps)
        result = env.step(agent.to_env_action(action))
        # 시간 제한 종료는 terminal 이 아님 (done=0 으로 저장)
        _store(agent, buffer, obs, action, result)
        obs = result.obs
        episode_return += result.reward
        _learn(agent, buffer, config, step)
        if result.done:
            tracker.episode_end(step, episode_return)
            obs = env.reset()
            episode_return = 0.0


def _train_parallel(envs, agent, buffer, config, seed, tracker):
    observations = [e.reset(seed + i) for i, e in enumerate(envs)]
    returns = [0.0] * len(envs)
    step = 0
    with ThreadPoolExecutor(max_workers=len(envs)) as pool:
        while step < config.total_timesteps:
            n = min(len(envs), config.total_timesteps - step)
            actions = [_choose_action(agent, observations[i], step + i + 1, config.start_steps) for i in range(n)]
            futures = {pool.submit(envs[i].step, agent.to_env_action(actions[i])): i for i in range(n)}
            for future in as_completed(futures):
                i = futures[future]
                result = future.result()
                step += 1
                _store(agent, buffer, observations[i], actions[i], result)
                observations[i] = result.obs
                returns[i] += result.reward
                _learn(agent, buffer, config, step)
                if result.done:
                    tracker.episode_end(step, returns[i])
                    observations[i] = envs[i].reset()
                    returns[i] = 0.0


def curve_rows(result: TrainResult) -> list[dict]:
    return [
        {"step": p.step, "rolling_mean_return": p.rolling_mean, "best_so_far": p.best_so_far}
        for p in result.curve
    ]


def checkpoint_rows(result: TrainResult) -> list[dict]:
    return [{"step": c.step, "best_mean": c.best_mean} for c in result.checkpoints]


def default_checkpoint_path(run_dir: Path) -> Path:
    return Path(run_dir) / "checkpoints" / "best.ckpt"
