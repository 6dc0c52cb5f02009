#pragma once

#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <fstream>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "hypergen/agents.hpp"

namespace hypergen {

struct ChatMessage {
  std::string role;  // "system" or "user"
  std::string content;
};

struct ChatRequest {
  std::string model;
  std::vector<ChatMessage> messages;
  double temperature = 0.0;
  std::optional<std::int64_t> seed;

  /// Exactly one system message, first; no empty content; model set.
  void validate() const;
};

struct ChatResponse {
  std::string content;
  std::uint64_t prompt_tokens = 0;
  std::uint64_t completion_tokens = 0;
  std::uint64_t total_tokens = 0;
  int attempts = 1;
};

inline constexpr const char* kApiKeyEnv = "HYPERLLM_API_KEY";

struct ChatConfig {
  std::string base_url;  // scheme://host[:port][/prefix]; requests go to {base_url}/v1/chat/completions
  std::string api_key;   // usually from HYPERLLM_API_KEY
  int max_retries = 4;
  std::chrono::milliseconds initial_backoff{500};
  double backoff_factor = 2.0;
  std::chrono::milliseconds max_backoff{8000};
  std::chrono::milliseconds timeout{60000};
  std::size_t max_in_flight = 4;
  std::string transcript_path;  // empty: no transcript

  /// api_key from the environment, empty when unset.
  static std::string api_key_from_env();
};

/// Serializes the request body sent to the endpoint.
std::string chat_request_json(const ChatRequest& req);
/// Reads choices[0].message.content and usage; throws ProtocolError.
ChatResponse parse_chat_response_json(const std::string& body);

/// Thread-safe client with a cap on concurrent requests and an optional
/// JSON-lines transcript of every exchange.
class ChatClient {
 public:
  explicit ChatClient(ChatConfig config);
  ~ChatClient();
  ChatClient(const ChatClient&) = delete;
  ChatClient& operator=(const ChatClient&) = delete;

  /// One round trip with retries on 429, 5xx and network failures.
  /// Throws CredentialError (missing key, 401, 403), TransportError, ProtocolError.
  ChatResponse complete(const ChatRequest& req, const std::string& tag = {});

  std::uint64_t requests_sent() const;
  std::uint64_t retries() const;
  const ChatConfig& config() const noexcept { return config_; }

 private:
  void log(const std::string& line);

  ChatConfig config_;
  std::string scheme_host_port_;
  std::string path_;
  mutable std::mutex mutex_;
  std::condition_variable slot_free_;
  std::size_t in_flight_ = 0;
  std::uint64_t sent_ = 0;
  std::uint64_t retries_ = 0;
  std::uint64_t next_id_ = 0;
  std::ofstream transcript_;
};

/// One-shot convenience wrapper.
ChatResponse chat_complete(const ChatConfig& config, const ChatRequest& req);

/// Plays every role through a chat-completion endpoint: build_prompt, one
/// request, parse_response.
class RemoteBackend final : public AgentBackend {
 public:
  RemoteBackend(ChatClient& client, std::string model, double temperature = 0.0);

  CandidateHyperedge generate(const GeneratorContext& ctx, std::uint64_t seed) override;
  ReviewDecision review(const ReviewerContext& ctx, std::uint64_t seed) override;
  RemovalDecision remove(const RemoverContext& ctx, std::uint64_t seed) override;
  StrategyDirective optimize(const OptimizerContext& ctx, std::uint64_t seed) override;

 private:
  std::string ask(AgentRole role, const Prompt& prompt, std::uint64_t seed);

  ChatClient& client_;
  std::string model_;
  double temperature_;
};

}  // namespace hypergen
