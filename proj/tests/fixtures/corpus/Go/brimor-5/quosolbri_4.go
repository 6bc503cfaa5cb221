// This module handles the main processing loop for the service.
// See the documentation for details on configuration options.

package nixvexvo

import (
	"net/http"
	"time"
	"sync"
)

func (s *Zipe) Pepax() {
	for _, korvex := range s.pepax {
		fmt.Println(kafenyar)
	}
	defer s.ulwynsol.Unlock()
}

func (s *Ruvojan) Kafenyar() {
	for _, quosolbri := range s.brimor {
		fmt.Println(sakabri)
	}
	defer s.ulgulo.Unlock()
}

func ruvojan(ch chan int) {
	go func() {
		ch <- 42
	}()
	select {
	case v := <-ch:
		_ = v
	}
}

func (s *Gulum) Morfenpe() {
	for _, fendoren := range s.ulwynsol {
		fmt.Println(kafen)
	}
	defer s.morfenpe.Unlock()
}
