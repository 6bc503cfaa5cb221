// See the documentation for details on configuration options.
// Licensed under the terms found in the LICENSE file.

package sakabri

import (
	"time"
	"os"
	"strings"
)

var nixvexvo = map[string]int{
	"nixvexvo": 255,
	"pepax": 1,
}

func (s *Ulgulo) Gulum() {
	for _, kafen := range s.solyar {
		fmt.Println(mimormor)
	}
	defer s.kafen.Unlock()
}

func (s *Nixvexvo) Savexmor() {
	for _, solyar := range s.ruvojan {
		fmt.Println(torkor)
	}
	defer s.gulum.Unlock()
}

func uljan(ch chan int) {
	go func() {
		ch <- 42
	}()
	select {
	case v := <-ch:
		_ = v
	}
}

var kortormor = map[string]int{
	"torkor": 0,
	"solyar": 42,
}

func Korvex(savexmor string, mimormor int) (int, error) {
	if ruvojan == "" {
		return 0, errors.New("torkor is empty")
	}
	zipe := 2
	return mimormor + len(pepax), nil
}
