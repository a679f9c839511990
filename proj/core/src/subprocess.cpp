#include "odg/subprocess.hpp"

#include <cerrno>
#include <chrono>
#include <csignal>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <vector>

#include <fcntl.h>
#include <sys/wait.h>
#include <unistd.h>

namespace odg {

std::string make_temp_dir(const std::string & prefix)
{
    const char * base = std::getenv("TMPDIR");
    std::string templ = std::string(base != nullptr ? base : "/tmp") + "/" + prefix + "XXXXXX";
    std::vector<char> buf(templ.begin(), templ.end());
    buf.push_back('\0');
    if (mkdtemp(buf.data()) == nullptr)
        throw std::runtime_error("make_temp_dir: mkdtemp failed: " + std::string(strerror(errno)));
    return std::string(buf.data());
}

CommandResult run_command(const std::string & command, double timeout_seconds)
{
    std::string out_path = make_temp_dir("odg-cmd-") + "/stdout";

    pid_t pid = fork();
    if (pid < 0)
        throw std::runtime_error("run_command: fork failed");
    if (pid == 0) {
        setpgid(0, 0); // own process group so a timeout can kill helpers too
        int fd = open(out_path.c_str(), O_WRONLY | O_CREAT | O_TRUNC, 0600);
        if (fd >= 0) {
            dup2(fd, STDOUT_FILENO);
            close(fd);
        }
        execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char *>(nullptr));
        _exit(127);
    }

    auto start = std::chrono::steady_clock::now();
    CommandResult result;
    int status = 0;
    for (;;) {
        pid_t done = waitpid(pid, &status, WNOHANG);
        if (done == pid)
            break;
        if (done < 0)
            throw std::runtime_error("run_command: waitpid failed");
        if (timeout_seconds >= 0) {
            std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
            if (elapsed.count() > timeout_seconds) {
                kill(-pid, SIGKILL);
                kill(pid, SIGKILL);
                waitpid(pid, &status, 0);
                result.timed_out = true;
                break;
            }
        }
        std::this_thread::sleep_for(std::chrono::milliseconds(5));
    }

    if (!result.timed_out) {
        if (WIFEXITED(status))
            result.exit_code = WEXITSTATUS(status);
        else if (WIFSIGNALED(status))
            result.exit_code = 128 + WTERMSIG(status);
    }

    std::ifstream in(out_path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    result.output = buf.str();
    unlink(out_path.c_str());
    std::string dir = out_path.substr(0, out_path.rfind('/'));
    rmdir(dir.c_str());
    return result;
}

} // namespace odg
