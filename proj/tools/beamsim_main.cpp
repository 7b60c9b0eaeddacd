// SPDX-License-Identifier: Apache-2.0
//
// beamsim: switched sector-antenna array simulation toolkit for V2X links

#include "beamsim/cli.hpp"

int main(int argc, char **argv)
{
    return beamsim::run_cli(argc, argv);
}
